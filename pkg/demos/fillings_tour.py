"""Walk through the filling search for a few small lens spaces."""

from lensfill import LensSpace, cf_dual, cf_eval
from lensfill.lisca import fillings, min_filling_euler, two_replaceable_witnesses


def show(p, q):
    lens = LensSpace(p, q)
    print(f"{lens}: plumbing {list(lens.plumbing_string)}, dual {list(lens.dual_string)}")
    for f in fillings(lens):
        print(f"  zero string {list(f.zero_string)}  euler {f.euler}")
    print(f"  minimal euler {min_filling_euler(lens)}")
    for w in two_replaceable_witnesses(lens):
        print(f"  euler-2 witness {list(w.zero_string)} bumps {list(w.bumps)} form {w.form}")


if __name__ == "__main__":
    s = (2, 4, 4, 2)
    print(f"{s} evaluates to {cf_eval(s)}, dual {cf_dual(s)}")
    for p, q in [(45, 26), (4, 1), (8, 3), (9, 5), (2, 1)]:
        show(p, q)
