"""Sweep (m, k) and tabulate engine dimensions against the printed closed forms.

    python scripts/crosscheck_table.py --m-max 5 --k-max 4 > crosscheck.csv
"""

import argparse
import csv
import sys

from grassembed.moduli import PairConfig, full_report


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--m-max", type=int, default=4)
    ap.add_argument("--k-max", type=int, default=3)
    args = ap.parse_args()

    w = csv.writer(sys.stdout)
    w.writerow(
        ["m", "k", "dim_F", "dim_S2", "vk_complex", "vk_real", "remark", "example", "corollary_complex", "disagreements"]
    )
    for m in range(2, args.m_max + 1):
        for k in range(1, args.k_max + 1):
            r = full_report(PairConfig(m, k))
            bad = [name for name, ok in r.match_flags.items() if ok is False]
            w.writerow(
                [
                    m,
                    k,
                    r.base_dim,
                    r.sym_dim,
                    r.vk_complex_dim,
                    r.vk_real_dim,
                    r.paper_remark_value,
                    "" if r.paper_example_value is None else r.paper_example_value,
                    r.paper_corollary_complex_dim,
                    ";".join(bad),
                ]
            )


if __name__ == "__main__":
    main()
