#!/usr/bin/env python3
"""Rebuild the 9-column Elec2 layout from the 6-column normalized release.

Some redistributions of the Elec2 electricity-pricing stream keep only the
six columns period, nswprice, nswdemand, vicprice, vicdemand, transfer and a
0/1 target (1 = UP). The `bench` tool expects the full layout

    date,day,period,nswprice,nswdemand,vicprice,vicdemand,transfer,class

The two dropped columns are recovered from the calendar: every day holds 48
half-hour periods (period resets to 0 at each day boundary), the stream
starts on Tuesday 1996-05-07, `day` is the weekday code with Monday = 1, and
`date` is the yymmdd calendar value min-max normalized over the covered
range. The recovered `date` encoding is a best reconstruction; results on a
file rebuilt this way can differ slightly from results on an original copy.

usage: rebuild_elec2.py <six-column elec.csv> <output.csv>
"""

import csv
import datetime
import sys

START = datetime.date(1996, 5, 7)
PERIODS_PER_DAY = 48


def yymmdd(day: datetime.date) -> int:
    return (day.year % 100) * 10000 + day.month * 100 + day.day


def main(src: str, dst: str) -> int:
    with open(src, newline="") as f:
        rows = list(csv.reader(f))
    if rows and not rows[0][0].replace(".", "", 1).isdigit():
        rows = rows[1:]
    if len(rows) % PERIODS_PER_DAY:
        print(f"{src}: {len(rows)} rows is not a whole number of days", file=sys.stderr)
        return 1
    n_days = len(rows) // PERIODS_PER_DAY
    first = yymmdd(START)
    last = yymmdd(START + datetime.timedelta(days=n_days - 1))
    with open(dst, "w", newline="") as f:
        out = csv.writer(f, lineterminator="\n")
        out.writerow(["date", "day", "period", "nswprice", "nswdemand",
                      "vicprice", "vicdemand", "transfer", "class"])
        for i, row in enumerate(rows):
            if len(row) != 7:
                print(f"{src}: line {i + 2}: expected 7 columns", file=sys.stderr)
                return 1
            day = START + datetime.timedelta(days=i // PERIODS_PER_DAY)
            if (i % PERIODS_PER_DAY == 0) != (float(row[0]) == 0.0):
                print(f"{src}: line {i + 2}: period does not match day boundary", file=sys.stderr)
                return 1
            date = (yymmdd(day) - first) / (last - first)
            values = [f"{float(v):.6g}" for v in row[:6]]
            label = "UP" if row[6].strip() in ("1", "UP") else "DOWN"
            out.writerow([f"{date:.6f}", day.isoweekday(), *values, label])
    return 0


if __name__ == "__main__":
    if len(sys.argv) != 3:
        print(__doc__, file=sys.stderr)
        sys.exit(2)
    sys.exit(main(sys.argv[1], sys.argv[2]))
