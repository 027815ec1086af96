"""Decompose the two bundled sector series and print their components.

Walks through the core workflow: load a values-format file, split it into
trend / seasonal / random with the 2x12 centered moving average, and look
at the seasonal fingerprint of each sector.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).parent.parent / "src"))

from indexcast import (MONTH_ABBR, MonthStamp, decompose_additive,
                       read_values_file)
from indexcast.render import render_decomposition

DATA = pathlib.Path(__file__).parent.parent / "data"

for name, filename in [("Consumer Durables", "consumer_durables_monthly.txt"),
                       ("Small Cap", "small_cap_monthly.txt")]:
    series = read_values_file(DATA / filename, MonthStamp(2010, 1))
    result = decompose_additive(series)
    print(f"=== {name}: {len(series)} months {series.start}..{series.end}")
    print("seasonal indices (index points):")
    for month, idx in zip(MONTH_ABBR, result.seasonal_indices):
        bar = "#" * int(abs(idx) / 15)
        print(f"  {month} {idx:8.1f}  {bar}")
    print("\nfirst twelve rows of the decomposition table:")
    table = render_decomposition(result, "text").splitlines()
    print("\n".join(table[:13]))
    print()
