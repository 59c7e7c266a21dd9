#!/usr/bin/env python3
"""Walk one random Hahn-Banach extension end to end and print what happened:
the submodule, the functional on it, the extension, and the preserved norms.

    python scripts/extension_demo.py --n 5 --generators 2 --seed 0
"""

import argparse
import json

import numpy as np

from bicomplex import Submodule, TFunctional, TVector, hahn_banach_extend


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=5, help="ambient dimension")
    parser.add_argument("--generators", type=int, default=2)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    gens = [TVector(rng.uniform(-1, 1, (args.n, 4))) for _ in range(args.generators)]
    Y = Submodule(args.n, gens)
    ystar = TFunctional(TVector(rng.uniform(-1, 1, (args.n, 4))))

    print(f"ambient dimension     : {args.n}")
    print(f"submodule             : {Y!r}")
    print(f"functional norms on Y : components {ystar.restricted_component_norms(Y)}")

    report = hahn_banach_extend(ystar, Y)
    print(f"restriction error     : {report.restriction_error:.3e}")
    print(f"component norms (y*)  : {report.y_component_norms}")
    print(f"component norms (x*)  : {report.x_component_norms}")
    print(f"aggregate norms (y*)  : sup {report.y_norms.sup_norm:.12f}, idem {report.y_norms.idem_norm:.12f}")
    print(f"aggregate norms (x*)  : sup {report.x_norms.sup_norm:.12f}, idem {report.x_norms.idem_norm:.12f}")

    # spot-check the extension on a few submodule points
    worst = 0.0
    for _ in range(10):
        y = Y.project(TVector(rng.uniform(-1, 1, (args.n, 4))))
        worst = max(worst, (report.extension(y) - ystar(y)).norm())
    print(f"max |x*(y) - y*(y)|   : {worst:.3e} over 10 sampled points of Y")
    print("full report JSON:")
    print(json.dumps(report.to_json(), indent=2))


if __name__ == "__main__":
    main()
