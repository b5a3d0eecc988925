"""Regenerate src/cointkit/data/synthetic.csv, a 48-month stand-in for the replication data.

Values are simulated (log random walks with seasonality for encounters);
oil_income = 0.0304 * oil_price * oil_production so the consistency check
reports a common ratio.
"""

import csv
import sys
from pathlib import Path

import numpy as np

from cointkit.series import Month

T = 48
START = Month(2021, 1)


def main(path):
    rng = np.random.default_rng(20211)
    t = np.arange(T)
    season = 0.15 * np.sin(2 * np.pi * t / 12)
    encounters = np.exp(8.5 + np.cumsum(rng.normal(0.01, 0.12, T)) + season)
    price = np.exp(np.log(55.0) + np.cumsum(rng.normal(0.005, 0.08, T)))
    production = np.exp(np.log(650.0) + np.cumsum(rng.normal(0.004, 0.04, T)))
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["date", "encounters", "oil_income", "oil_price", "oil_production"])
        for i in range(T):
            p, q = round(float(price[i]), 2), round(float(production[i]), 1)
            w.writerow([str(START.shift(i)), round(float(encounters[i])), round(0.0304 * p * q, 6), p, q])


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parents[1] / "src/cointkit/data/synthetic.csv")
