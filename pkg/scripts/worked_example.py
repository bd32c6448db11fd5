"""Walk the 4x4 example through each stage and print the intermediate matrices."""

import numpy as np

from demcomp import dematel
from demcomp.completion import complete, to_direct_relation
from demcomp.io import parse_pcm_csv, write_matrix_csv

EXAMPLE = "A,B,C,D\n1,*,4,8\n*,1,2,4\n1/4,1/2,1,2\n1/8,1/4,1/2,1\n"


def main():
    m = parse_pcm_csv(EXAMPLE)
    d = to_direct_relation(m)
    n_mat = dematel.normalize(d)
    t = dematel.total_relation(n_mat, m.labels)
    rep = complete(m)
    np.set_printoptions(precision=4, suppress=True)
    print("D =\n", d.values)
    print("N =\n", n_mat)
    print("T =\n", t.values)
    print(f"spectral radius of N: {rep.spectral_radius:.6f}")
    print("completed:")
    print(write_matrix_csv(rep.completed), end="")
    c = rep.consistency
    print(f"lambda_max={c.lambda_max:.6f} CI={c.ci:.2e} CR={c.cr:.2e}")


if __name__ == "__main__":
    main()
