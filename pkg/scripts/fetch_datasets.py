#!/usr/bin/env python3
"""Fetch the UCI soybean-small and breast-cancer-wisconsin files into data/.

Converts both to the plain CSV layout the loaders expect: numeric feature
columns followed by a label column.  Requires outbound network access to
archive.ics.uci.edu.
"""

import sys
import urllib.request
from pathlib import Path

BASE = "https://archive.ics.uci.edu/ml/machine-learning-databases"
SOURCES = {
    "soybean-small": f"{BASE}/soybean/soybean-small.data",
    "breast-wisconsin": f"{BASE}/breast-cancer-wisconsin/breast-cancer-wisconsin.data",
}

DATA_DIR = Path(__file__).resolve().parents[1] / "data"


def fetch(url: str) -> list[str]:
    with urllib.request.urlopen(url, timeout=30) as resp:
        text = resp.read().decode("utf-8")
    return [line.strip() for line in text.splitlines() if line.strip()]


def convert_soybean(lines: list[str]) -> list[str]:
    # 35 integer attributes then a class tag like D1; keep as-is
    return lines


def convert_breast(lines: list[str]) -> list[str]:
    # drop the leading sample id; keep 9 attributes ('?' marks missing) + class
    return [",".join(line.split(",")[1:]) for line in lines]


def main() -> int:
    DATA_DIR.mkdir(exist_ok=True)
    converters = {"soybean-small": convert_soybean, "breast-wisconsin": convert_breast}
    for name, url in SOURCES.items():
        target = DATA_DIR / f"{name}.csv"
        if target.exists():
            print(f"{target} already present, skipping")
            continue
        print(f"fetching {url}")
        try:
            lines = fetch(url)
        except OSError as exc:
            print(f"failed to fetch {name}: {exc}", file=sys.stderr)
            return 1
        target.write_text("\n".join(converters[name](lines)) + "\n")
        print(f"wrote {target} ({len(lines)} rows)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
