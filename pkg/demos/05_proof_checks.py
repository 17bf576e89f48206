"""Run the named proof checks and print their certificate trees.

Each check certifies one lemma-sized inequality; a composite is proved only
when every child is.  Margins are rigorous enclosures of the quantity shown
to be nonnegative.
"""

from khintchine.verifier import (
    check_cond1_sign_at_sigma,
    check_cond1_small_x,
    check_cond2_h2,
)


def show(result, depth=0, max_depth=2):
    print(
        "  " * depth
        + f"{result.name}: {result.status}  margin [{result.margin.lo:.4g}, "
        f"{result.margin.hi:.4g}]"
    )
    if depth < max_depth:
        for child in result.children:
            show(child, depth + 1, max_depth)


print("== sign of F_* - G_* at sigma = 0.97 ==")
show(check_cond1_sign_at_sigma())

print()
print("== negativity of F_* - G_* on (0, 1/15] ==")
show(check_cond1_small_x(), max_depth=1)

print()
print("== the gaussian/cosine integral at p = 2 (four-piece bound) ==")
res = check_cond2_h2()
show(res, max_depth=1)
net = [c for c in res.children if c.name == "net-margin"][0]
print()
print(f"net H(2) margin: {net.margin} -- the proof closes with room to spare")
