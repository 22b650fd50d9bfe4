#!/usr/bin/env python3
"""Regenerate the bundled corpus under src/hopflab/corpus/.

Every file is produced from the group tables and builders, so the corpus
stays reproducible; run this after changing a builder or the text format.
"""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from hopflab import (  # noqa: E402
    Field,
    ModuleRep,
    Twist,
    drinfeld_double,
    dual_bicharacter_twist,
    dual_group_algebra,
    group_algebra,
    serialize_hopf,
    serialize_module,
    serialize_twist,
    subgroup_bicharacter_twist,
    twist_validate,
)
from hopflab.groups import BUNDLED_GROUPS, cyclic, direct_product  # noqa: E402

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "hopflab" / "corpus"


def write(name: str, text: str):
    path = OUT / name
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path.relative_to(OUT.parents[2])}")


def algebras():
    gf3 = Field(3)
    gf5 = Field(5)
    gf7 = Field(7)
    gf25 = Field(5, 2)
    gf49 = Field(7, 2)
    G = BUNDLED_GROUPS
    c3c3 = direct_product(cyclic(3), cyclic(3))

    def named(H, name, names=None):
        H.name = name
        if names is not None:
            H.basis_names = names
        return H

    yield named(group_algebra(G["c2"], gf5), "c2_gf5", G["c2"].names)
    yield named(group_algebra(G["c3"], gf7), "c3_gf7", G["c3"].names)
    yield named(group_algebra(G["c3"], gf5), "c3_gf5", G["c3"].names)
    yield named(group_algebra(G["c3"], gf49), "c3_gf49", G["c3"].names)
    yield named(group_algebra(G["c4"], gf5), "c4_gf5", G["c4"].names)
    yield named(group_algebra(G["k4"], gf5), "k4_gf5", G["k4"].names)
    yield named(group_algebra(G["s3"], gf7), "s3_gf7", G["s3"].names)
    yield named(group_algebra(G["d4"], gf5), "d4_gf5", G["d4"].names)
    yield named(group_algebra(G["q8"], gf25), "q8_gf25", G["q8"].names)
    # p | |G|: parses and satisfies the axioms but is not semisimple
    yield named(group_algebra(G["c3"], gf3, check=False), "c3_gf3", G["c3"].names)

    yield named(dual_group_algebra(G["c2"], gf5), "c2dual_gf5")
    yield named(dual_group_algebra(G["c4"], gf5), "c4dual_gf5")
    yield named(dual_group_algebra(G["k4"], gf5), "k4dual_gf5")
    yield named(dual_group_algebra(G["s3"], gf7), "s3dual_gf7")
    yield named(dual_group_algebra(c3c3, gf7), "c3c3dual_gf7")

    yield named(drinfeld_double(G["c2"], gf5), "d_c2_gf5")
    yield named(drinfeld_double(G["c3"], gf7), "d_c3_gf7")
    yield named(drinfeld_double(G["s3"], gf7), "d_s3_gf7")


def k4_twist(H):
    """Bicharacter β(x,y) = (-1)^{x₁y₂+x₂y₁} on C2×C2 (x = (x₁,x₂) at index 2x₁+x₂)."""
    F = H.field
    one, minus = F.one, F.neg(F.one)
    beta = [
        [minus if (divmod(x, 2)[0] * divmod(y, 2)[1] + divmod(x, 2)[1] * divmod(y, 2)[0]) % 2 else one for y in range(4)]
        for x in range(4)
    ]
    return Twist(H, dual_bicharacter_twist(H, BUNDLED_GROUPS["k4"], beta))


def c3c3_twist(H):
    """β(x,y) = ω^{x₁y₂} with ω = 2 a primitive cube root of 1 in GF(7)."""
    F = H.field
    omega = F.from_int(2)
    c3c3 = direct_product(cyclic(3), cyclic(3))
    beta = [
        [F.pow(omega, divmod(x, 3)[0] * divmod(y, 3)[1]) for y in range(9)] for x in range(9)
    ]
    return Twist(H, dual_bicharacter_twist(H, c3c3, beta))


def d4_twist(H):
    """Twist of kD4 supported on the K4 subgroup {e, r², s, r²s}; the
    bicharacter is not conjugation-invariant, so Δ genuinely changes."""
    F = H.field
    G = BUNDLED_GROUPS["d4"]
    sub = [0, 2, 4, 6]
    one, minus = F.one, F.neg(F.one)

    def xy(a):  # a-th subgroup element is r^{2x} s^y
        return divmod(a, 2)

    chars = [
        [minus if (u * xy(a)[0] + v * xy(a)[1]) % 2 else one for a in range(4)]
        for u in range(2)
        for v in range(2)
    ]
    beta = [
        [minus if (divmod(t, 2)[0] * divmod(w, 2)[1]) % 2 else one for w in range(4)]
        for t in range(4)
    ]
    return Twist(H, subgroup_bicharacter_twist(H, G, sub, chars, beta))


def s3_standard_module(H):
    """The 2-dim reflection representation of S3 mod 7.

    Realized on {(a,b,c) : a+b+c = 0} with basis (1,-1,0), (0,1,-1); each
    permutation acts by coordinate shuffle (σ·v)_i = v_{σ⁻¹(i)}.
    """
    import itertools

    F = H.field
    perms = sorted(itertools.permutations(range(3)))  # matches the group table order
    basis3 = [(1, -1, 0), (0, 1, -1)]
    action = []
    for s in perms:
        sinv = [s.index(i) for i in range(3)]
        cols = []
        for v in basis3:
            w = [v[sinv[i]] for i in range(3)]
            # coordinates of w in basis3: w = a·(1,-1,0) + b·(0,1,-1) with a = w₀, b = -w₂
            cols.append((w[0] % 7, -w[2] % 7))
        M = [[F.from_int(cols[c][r]) for c in range(2)] for r in range(2)]
        action.append(M)
    return ModuleRep(H, action, name="s3_std2").validate()


def main():
    OUT.mkdir(exist_ok=True)
    built = {}
    for H in algebras():
        built[H.name] = H
        write(H.name + ".hopf", serialize_hopf(H))

    for key, builder, fname in (
        ("k4dual_gf5", k4_twist, "k4_bichar.twist"),
        ("c3c3dual_gf7", c3c3_twist, "c3c3_bichar.twist"),
        ("d4_gf5", d4_twist, "d4_k4sub.twist"),
    ):
        tw = builder(built[key])
        twist_validate(tw)
        write(fname, serialize_twist(tw))

    write("s3_std2_gf7.module", serialize_module(s3_standard_module(built["s3_gf7"])))


if __name__ == "__main__":
    main()
