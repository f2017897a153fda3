from fractions import Fraction

import pytest

import hopfq


def test_bernoulli_and_partitions():
    assert hopfq.bernoulli(2) == Fraction(1, 6)
    assert hopfq.partitions_of(3) == [[3], [2, 1], [1, 1, 1]]
    assert hopfq.dim([2, 2]) == 2
    assert hopfq.frobenius([3, 2]) == ([2, 0], [1, 0])


def test_schur():
    s = hopfq.schur([1, 1])
    assert s == {((1, 2),): {(0, 0): Fraction(1, 2)}, ((2, 1),): {(0, 0): Fraction(-1, 2)}}


def test_hamiltonian_vacuum_terms():
    h0 = hopfq.hamiltonian(0, 3)
    assert h0[((), ())] == {(0, 2): Fraction(1, 2), (2, 0): Fraction(-1, 24)}
    assert h0[(((1, 1),), ((1, 1),))] == {(0, 0): 1}
    assert hopfq.hamiltonian(-1, 0) == {((), ()): {(0, 1): 1}}
    assert "eps" not in str(hopfq.naive_hamiltonian(2, 4))
    c2 = hopfq.vacuum_constant(2)
    assert c2[(4, 0)] == Fraction(7, 5760)


def test_eigen_and_commutativity():
    assert hopfq.eigenvalue(0, [1]) == {(0, 2): Fraction(1, 2), (2, 0): Fraction(23, 24)}
    assert hopfq.verify_commutativity(3, 6, jobs=2)
    assert hopfq.verify_eigenvectors(2, 5)


def test_disk_and_hurwitz():
    rows = hopfq.disk_table(2, 1, u0=0)
    assert [r[0] for r in rows] == [[], [1], [2], [1, 1]]
    assert rows[1][1] == {(-1, 0): 1}
    assert hopfq.plane_wave_check(6)
    assert hopfq.p1_routes_agree(3, 2)
    assert hopfq.hurwitz_oracle(2, 2, [1, 1]) == Fraction(1, 2)
    series = hopfq.hurwitz_series(3, 3)
    assert series[(2, 1)][((2, 1),)] == {(0, 0): Fraction(1, 2)}


def test_fermion_sign():
    assert hopfq.boson_fermion_sign([1]) == 1
    assert hopfq.boson_fermion_sign([1, 1]) == -1


def test_kp():
    assert hopfq.kp_check("bilinear-1", 6, {0, 1}, u0=0, eps=1) == (True, 2)
    assert hopfq.kp_check("kp-equation", 7, {0}, u0=None, eps=None)[0]
    with pytest.raises(ValueError):
        hopfq.kp_check("bilinear-1", 6, {1}, u0=None, eps=1)
