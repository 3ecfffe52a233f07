#!/usr/bin/env python3
"""Fetch/convert the example data sets used by the acceptance suite.

Two files are expected under --data-dir (default: data/):

  ethernet.csv   Ethernet traffic (bytes per 10 ms) from the 1989 Bellcore
                 LAN measurements; 4000 observations.  Distributed as the
                 `ethernetTraffic` series of the R package `longmemo` on
                 CRAN.  Written as a single headerless numeric column (the
                 loader addresses it as column "0").

  rainfall.csv   Annual rainfall volume (mm) in the province of Tucuman,
                 Argentina, for 1914-1996 (83 observations).  The series
                 was recorded by the Agricultural Experiment Station Obispo
                 Colombres (EEAOC) and is reported in Wu, Woodroofe & Mentz
                 (2001), "Isotonic regression: another look at the
                 changepoint problem", Biometrika 88(3).  Written with
                 header `year,rainfall`.

Ethernet is fetched automatically when either a local R installation
(`Rscript`) or network access to CRAN plus the `pyreadr` package is
available.  The rainfall series is not shipped in any package index we can
pull from, so it must be supplied as a raw year/value text file (e.g.
transcribed from the reference above) and converted with --rainfall-raw;
rows outside 1914-1996 are dropped.
"""

import argparse
import csv
import re
import shutil
import subprocess
import sys
import tarfile
import tempfile
import urllib.error
import urllib.request
from pathlib import Path

CRAN_URLS = [
    # current release first, then the archive layout
    "https://cloud.r-project.org/src/contrib/longmemo_1.1-3.tar.gz",
    "https://cloud.r-project.org/src/contrib/longmemo_1.1-2.tar.gz",
    "https://cloud.r-project.org/src/contrib/Archive/longmemo/longmemo_1.1-1.tar.gz",
]

ETHERNET_N = 4000
RAIN_FIRST, RAIN_LAST = 1914, 1996


def write_single_column(values, out_path: Path) -> None:
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with out_path.open("w", newline="") as f:
        for v in values:
            f.write(f"{v}\n")


def ethernet_via_rscript(out_path: Path) -> bool:
    rscript = shutil.which("Rscript")
    if rscript is None:
        return False
    code = (
        'if (!requireNamespace("longmemo", quietly=TRUE)) '
        'install.packages("longmemo", repos="https://cloud.r-project.org"); '
        "x <- as.numeric(longmemo::ethernetTraffic); "
        f'write.table(x, file="{out_path}", row.names=FALSE, col.names=FALSE)'
    )
    print(f"trying {rscript} ...")
    res = subprocess.run([rscript, "-e", code], capture_output=True, text=True)
    if res.returncode != 0:
        print(res.stderr.strip() or "Rscript failed", file=sys.stderr)
        return False
    return out_path.exists()


def ethernet_via_cran_tarball(out_path: Path) -> bool:
    try:
        import pyreadr  # pip install pyreadr
    except ImportError:
        print("pyreadr not installed (pip install pyreadr); skipping the "
              "CRAN-tarball route", file=sys.stderr)
        return False
    for url in CRAN_URLS:
        print(f"trying {url} ...")
        try:
            with urllib.request.urlopen(url, timeout=60) as resp:
                payload = resp.read()
        except (urllib.error.URLError, OSError) as e:
            print(f"  download failed: {e}", file=sys.stderr)
            continue
        with tempfile.TemporaryDirectory() as tmp:
            tmp_tar = Path(tmp) / "longmemo.tar.gz"
            tmp_tar.write_bytes(payload)
            with tarfile.open(tmp_tar) as tar:
                member = next(
                    (m for m in tar.getmembers()
                     if m.name.endswith("ethernetTraffic.rda")), None)
                if member is None:
                    print("  no ethernetTraffic.rda in tarball",
                          file=sys.stderr)
                    continue
                tar.extract(member, tmp)
                rda = Path(tmp) / member.name
            frames = pyreadr.read_r(str(rda))
            obj = next(iter(frames.values()))
            values = [float(v) for v in obj.iloc[:, 0]]
            if len(values) != ETHERNET_N:
                print(f"  unexpected length {len(values)}", file=sys.stderr)
                continue
            write_single_column(values, out_path)
            return True
    return False


def fetch_ethernet(out_path: Path) -> bool:
    if out_path.exists():
        print(f"{out_path} already present")
        return True
    if ethernet_via_rscript(out_path) or ethernet_via_cran_tarball(out_path):
        print(f"wrote {out_path}")
        return True
    print("ethernet: could not fetch automatically.  Either install R and "
          "rerun, or run `pip install pyreadr` on a machine with CRAN "
          "access, or export the series yourself:\n"
          '    Rscript -e \'write.table(as.numeric(longmemo::ethernetTraffic),'
          ' "ethernet.csv", row.names=FALSE, col.names=FALSE)\'',
          file=sys.stderr)
    return False


def convert_rainfall(raw_path: Path, out_path: Path) -> bool:
    """Convert a raw year/value listing to rainfall.csv.

    Accepts comma- or whitespace-separated lines; any line whose first two
    numeric fields look like (year in 1800..2100, positive volume) is used.
    """
    rows = []
    for line in raw_path.read_text().splitlines():
        fields = [f for f in re.split(r"[,;\s]+", line.strip()) if f]
        nums = []
        for f in fields:
            try:
                nums.append(float(f))
            except ValueError:
                break
        if len(nums) < 2:
            continue
        year, value = int(nums[0]), nums[1]
        if 1800 <= year <= 2100 and value > 0:
            rows.append((year, value))
    rows = [(y, v) for y, v in rows if RAIN_FIRST <= y <= RAIN_LAST]
    rows.sort()
    years = [y for y, _ in rows]
    expected = list(range(RAIN_FIRST, RAIN_LAST + 1))
    if years != expected:
        missing = sorted(set(expected) - set(years))
        print(f"rainfall: need one row per year {RAIN_FIRST}-{RAIN_LAST}; "
              f"got {len(rows)} rows" +
              (f", missing {missing[:5]}..." if missing else ""),
              file=sys.stderr)
        return False
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with out_path.open("w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["year", "rainfall"])
        w.writerows(rows)
    print(f"wrote {out_path} ({len(rows)} rows)")
    return True


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--data-dir", default="data", type=Path)
    ap.add_argument("--rainfall-raw", type=Path, default=None,
                    help="raw year/value listing to convert to rainfall.csv")
    args = ap.parse_args()

    ok = True
    ok &= fetch_ethernet(args.data_dir / "ethernet.csv")

    rain_out = args.data_dir / "rainfall.csv"
    if rain_out.exists():
        print(f"{rain_out} already present")
    elif args.rainfall_raw is not None:
        ok &= convert_rainfall(args.rainfall_raw, rain_out)
    else:
        print("rainfall: no --rainfall-raw given and data/rainfall.csv not "
              "present; see the module docstring for the source reference",
              file=sys.stderr)
        ok = False
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
