"""Point-set construction: scrambling, star companion, symmetrization."""

import itertools
from collections import Counter
from fractions import Fraction

import pytest

from symdisc.permutations import Permutation, SigmaPattern, reversal
from symdisc.pointset import (
    DEFAULT_SIZE_CAP,
    PointSet,
    SizeCapError,
    reflect_x,
    scrambled_hammersley,
    symmetrized,
)

F = Fraction


def pattern(b, word, images=None):
    sigma = Permutation(tuple(images)) if images else Permutation.identity(b)
    return SigmaPattern(sigma, word)


def test_classical_base2_n1():
    ps = scrambled_hammersley(pattern(2, "s"))
    assert set(ps.points) == {(F(0), F(0)), (F(1, 2), F(1, 2))}
    assert ps.label == "scrambled" and ps.size == 2


def test_classical_base2_n2_with_order():
    ps = scrambled_hammersley(pattern(2, "ss"))
    assert ps.points == (
        (F(0), F(0)),
        (F(1, 4), F(1, 2)),
        (F(1, 2), F(1, 4)),
        (F(3, 4), F(3, 4)),
    )


def test_conjugate_word_base3():
    ps = scrambled_hammersley(pattern(3, "c"))
    assert set(ps.points) == {(F(2, 3), F(0)), (F(1, 3), F(1, 3)), (F(0), F(2, 3))}


def test_symmetrized_base2_n1():
    ps = symmetrized(pattern(2, "s"))
    assert Counter(ps.points) == Counter(
        [(F(0), F(0)), (F(1, 2), F(1, 2)), (F(1, 2), F(0)), (F(0), F(1, 2))]
    )
    assert ps.label == "symmetrized"


def test_symmetrized_base3_has_multiplicity_two():
    ps = symmetrized(pattern(3, "s"))
    counts = Counter(ps.points)
    assert ps.size == 6
    assert counts[(F(1, 3), F(1, 3))] == 2
    assert set(counts) == {
        (F(0), F(0)),
        (F(1, 3), F(1, 3)),
        (F(2, 3), F(2, 3)),
        (F(2, 3), F(0)),
        (F(0), F(2, 3)),
    }


def test_symmetrized_cardinality():
    sigma = Permutation((1, 0, 2, 4, 3))
    ps = symmetrized(SigmaPattern(sigma, "ss"))
    assert ps.size == 50


def test_reflect_examples():
    ps = scrambled_hammersley(pattern(2, "s"))
    assert set(reflect_x(ps).points) == {(F(1, 2), F(0)), (F(0), F(1, 2))}
    ps3 = scrambled_hammersley(pattern(3, "s"))
    assert set(reflect_x(ps3).points) == {(F(2, 3), F(0)), (F(1, 3), F(1, 3)), (F(0), F(2, 3))}


def test_reflect_is_involution():
    ps = scrambled_hammersley(pattern(3, "sc", images=(1, 0, 2)))
    assert reflect_x(reflect_x(ps)).points == ps.points


def test_reflect_rejects_symmetrized():
    with pytest.raises(ValueError):
        reflect_x(symmetrized(pattern(2, "s")))


@pytest.mark.parametrize("b", [2, 3, 4, 5])
def test_symmetrization_identity(b):
    """Union with the star pattern equals union with the reflection."""
    lowers = {
        2: [(0,)],
        3: [(0,)],
        4: [(0, 1), (1, 0)],
        5: [(0, 1), (1, 0)],
    }[b]
    from symdisc.permutations import PartialPermutation, extend_partial

    for lower in lowers:
        sigma = extend_partial(PartialPermutation(b, lower))
        for n in (1, 2, 3):
            if b**n > 256:
                continue
            for word in itertools.product("sc", repeat=n):
                pat = SigmaPattern(sigma, "".join(word))
                direct = symmetrized(pat)
                scr = scrambled_hammersley(pat)
                assert Counter(direct.points) == Counter(scr.points + reflect_x(scr).points)


@pytest.mark.parametrize("b,n", [(2, 3), (3, 2), (5, 2)])
def test_coordinates_enumerate_grid(b, n):
    ps = scrambled_hammersley(pattern(b, "sc" * (n // 2) + "s" * (n % 2)))
    grid = b**n
    ys = sorted(p[1] for p in ps.points)
    xs = sorted(p[0] for p in ps.points)
    expected = [F(m, grid) for m in range(grid)]
    assert ys == expected
    assert xs == expected


def test_grid_invariant_coordinates():
    ps = symmetrized(pattern(3, "ss"))
    grid = 3**2
    for x, y in ps.points:
        assert (x * grid).denominator == 1 and 0 <= x < 1
        assert (y * grid).denominator == 1 and 0 <= y < 1


def test_size_cap():
    with pytest.raises(SizeCapError):
        scrambled_hammersley(pattern(2, "s" * 13))  # 8192 > 4096
    assert scrambled_hammersley(pattern(2, "s" * 13), size_cap=10000).size == 8192
    with pytest.raises(SizeCapError):
        symmetrized(pattern(2, "sss"), size_cap=4)


def test_n_argument_must_agree():
    with pytest.raises(ValueError):
        scrambled_hammersley(pattern(2, "ss"), n=3)
    assert scrambled_hammersley(pattern(2, "ss"), n=2).size == 4


def test_pointset_label_validation():
    with pytest.raises(ValueError):
        PointSet(2, 1, ((F(0), F(0)),), "bogus")
