"""Rewrite the 9-twist seed factorization into the 6-twist one."""

from lensfill.palf import (
    SEED_X,
    boundary_h1_palf,
    daisy_substitute,
    euler_char_palf,
    h1_total,
    lantern_substitute,
)


def line(tag, f):
    print(f"{tag:>14}: euler {euler_char_palf(f)}  boundary {boundary_h1_palf(f)}  H1 {h1_total(f)}")
    print(f"{'':>14}  {f}")


if __name__ == "__main__":
    line("seed", SEED_X)
    mid = lantern_substitute(SEED_X, 4, 6, 5, 7)
    line("after lantern", mid)
    end = daisy_substitute(mid, [0, 1], [2, 3, 4], 7)
    line("after daisy", end)
