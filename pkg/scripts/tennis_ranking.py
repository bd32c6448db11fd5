"""Rank the 25 bundled tennis champions and compare against the published tables."""

import argparse

import numpy as np

from demcomp import bench, datasets, pcm
from demcomp.completion import CompletionOptions, Mode, complete


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.PRESERVE_KNOWN.value)
    ap.add_argument("--top", type=int, default=10)
    args = ap.parse_args()

    m = datasets.tennis_pcm(quiet=False)
    rep = complete(m, CompletionOptions(mode=Mode(args.mode)))
    pv = pcm.priorities(rep.completed)
    labels, published = datasets.tennis_completed()
    table = dict(datasets.tennis_ranking())

    filled = ~m.known
    print(f"{filled.sum() // 2} pairs filled, max deviation from published cells "
          f"{np.abs(rep.completed.values - published)[filled].max():.4f}")
    print(f"CR of completed matrix: {rep.consistency.cr:.4f}")
    print(f"{'rank':>4}  {'player':<12} {'ours':>7} {'published':>9}")
    for r, i in enumerate(pv.ranking[:args.top], start=1):
        print(f"{r:>4}  {labels[i]:<12} {pv.weights[i]:7.4f} {table[labels[i]]:9.4f}")
    ours = [pv.weights[labels.index(name)] for name in table]
    print(f"Kendall tau-b vs published priorities: {bench.kendall_tau_b(ours, list(table.values())):.3f}")


if __name__ == "__main__":
    main()
