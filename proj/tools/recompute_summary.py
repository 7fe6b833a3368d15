#!/usr/bin/env python3
"""Run wsnsim, then recompute every per-run metric and batch statistic in
summary.txt straight from the per-round CSV files."""

import argparse
import csv
import statistics
import subprocess
import sys
from pathlib import Path

HEADER = ["round", "alive", "asleep", "heads", "packets_to_sink",
          "residual_total_j", "e_th_j", "savings_total_j"]
METRICS = ["stability_period", "network_lifetime", "total_packets"]


def read_summary(path):
    out = {}
    for line in path.read_text().splitlines():
        key, _, value = line.partition("=")
        out[key] = value
    return out


def metrics_from_csv(path, nodes):
    with path.open(newline="") as f:
        rows = list(csv.reader(f))
    if rows[0] != HEADER:
        raise ValueError(f"{path}: unexpected header {rows[0]}")
    stability = lifetime = None
    packets = 0
    for row in rows[1:]:
        if len(row) != len(HEADER):
            raise ValueError(f"{path}: row with {len(row)} fields")
        rnd, alive, packets = int(row[0]), int(row[1]), int(row[4])
        if stability is None and alive < nodes:
            stability = rnd
        if lifetime is None and alive == 0:
            lifetime = rnd
    return {"stability_period": stability, "network_lifetime": lifetime,
            "total_packets": packets}


def close(a, b):
    return abs(a - b) <= 1e-6 * max(1.0, abs(a), abs(b))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--wsnsim", required=True)
    parser.add_argument("--workdir", required=True, type=Path)
    args = parser.parse_args()

    failures = []
    cases = [["--protocol", "sep", "--compare", "--seeds", "1-4", "--rounds", "4000"],
             ["--protocol", "teen", "--seeds", "2,5", "--rounds", "6000"],
             ["--protocol", "deec", "--ehorm", "--seeds", "3", "--rounds", "800"]]
    for i, case in enumerate(cases):
        out = args.workdir / f"case{i}"
        subprocess.run([args.wsnsim, *case, "--out", str(out)], check=True,
                       stdout=subprocess.DEVNULL)
        summary = read_summary(out / "summary.txt")
        nodes = int(summary["nodes"])
        max_rounds = int(summary["max_rounds"])
        for label in summary["variants"].split(","):
            prefix = f"run.{label}."
            seeds = sorted({k[len(prefix):].split(".")[0] for k in summary if k.startswith(prefix)})
            values = {m: [] for m in METRICS}
            for seed in seeds:
                key = prefix + seed
                got = metrics_from_csv(out / summary[key + ".csv"], nodes)
                for m in METRICS:
                    expected = "not_reached" if got[m] is None else str(got[m])
                    if summary[f"{key}.{m}"] != expected:
                        failures.append(f"{key}.{m}: summary {summary[key + '.' + m]} csv {expected}")
                    values[m].append(max_rounds if got[m] is None else got[m])
            for m in METRICS:
                v = values[m]
                stats = {"mean": statistics.fmean(v), "median": statistics.median(v),
                         "min": min(v), "max": max(v)}
                for name, want in stats.items():
                    key = f"{label}.{m}.{name}"
                    if not close(float(summary[key]), want):
                        failures.append(f"{key}: summary {summary[key]} recomputed {want}")
                reached = sum(1 for s in seeds if summary[f"{prefix}{s}.{m}"] == "not_reached")
                if int(summary[f"{label}.{m}.not_reached"]) != reached:
                    failures.append(f"{label}.{m}.not_reached mismatch")
    for f in failures:
        print(f)
    print("summary recomputation:", "ok" if not failures else f"{len(failures)} mismatches")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
