"""Smoke test for the coxhecke extension module.

Build and install first, e.g. `maturin develop -m crates/python/Cargo.toml`
or `pip install crates/python`.
"""

import coxhecke
from coxhecke import AffinePermutation, CoxeterSystem

a2 = CoxeterSystem("A2")
assert a2.rank == 2
assert a2.reduce([1, 0, 1, 1, 0]) == [1]
assert a2.length([0, 1, 0]) == 3
assert [len(w) for w in a2.support([0, 1], [1, 0])] == [0, 1, 3]
rows = a2.hecke_mult([0], [0])
assert rows == [([], 0, {0: 1}), ([0], 1, {-1: -1, 1: 1})], rows
assert len(a2.inversions([0, 1, 0])) == 3
assert len(CoxeterSystem("A3").ball(10)) == 24

free = CoxeterSystem(matrix=[[1, 0], [0, 1]])
assert free.length([0, 1, 0, 1]) == 4
try:
    CoxeterSystem("Q9")
except ValueError:
    pass
else:
    raise AssertionError("unknown preset accepted")

v = AffinePermutation([3, 0])
assert v.length() == 2 and str(v) == "w:3,0"
assert v * v.inverse() == AffinePermutation.identity(2)
assert AffinePermutation.from_word(2, v.reduced_word()) == v
t = AffinePermutation.translation([1, 0, -1])
assert 2 * t.length() == 8
assert coxhecke.twist(AffinePermutation.from_word(3, [0]), 1) == AffinePermutation.from_word(3, [1])
assert coxhecke.s_k([2, 0, 1], 1) == 4
assert coxhecke.bound(2)["text"] == "f(z) = 2z - 4"
assert coxhecke.bound(3)["text"] == "f(z) = z - 9"
assert len(coxhecke.enumerate_ball(2, 3)) == 7
assert coxhecke.small_twist(2, 1, 1) == [AffinePermutation.identity(2)]
assert coxhecke.candidates(AffinePermutation.identity(2), 1) == [AffinePermutation.identity(2)]
try:
    coxhecke.twist(AffinePermutation.identity(4), 2)
except ValueError:
    pass
else:
    raise AssertionError("non-coprime datum accepted")

report = a2.verify(radius=3, samples=200, seed=1)
assert report.startswith("# seed: 1\n") and "# result: PASS" in report

print("smoke test passed")
