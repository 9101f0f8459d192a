import math

import pytest

from crosscap.errors import ParityMismatchError, PermutationError
from crosscap.perms import (
    Permutation,
    closure,
    contains,
    format_cycles,
    from_cycles,
    group_order,
    lemma_generators,
    parse_cycles,
    schreier_sims,
    symn_generated,
)


def test_product_composes_as_functions():
    """(p * q)(i) equals p(q(i))."""
    p = from_cycles([(1, 2)], 3)
    q = from_cycles([(2, 3)], 3)
    assert (p * q)(3) == p(q(3)) == 1
    assert (p * q) != (q * p)


def test_from_cycles_rejects_repeated_point():
    """A point listed twice raises PermutationError."""
    with pytest.raises(PermutationError):
        from_cycles([(1, 2), (2, 3)], 4)


def test_parse_and_format_cycles():
    """Cycle notation parses with commas or spaces and prints with spaces."""
    p = parse_cycles("(1,5)(2, 4)", 5)
    assert format_cycles(p) == "(1 5)(2 4)"
    assert parse_cycles("()", 3).is_identity()
    assert format_cycles(Permutation.identity(4)) == "()"


def test_parse_cycles_rejects_garbage():
    """Text outside cycle notation raises PermutationError."""
    with pytest.raises(PermutationError):
        parse_cycles("(1 2) x", 3)


def test_inverse_undoes_permutation():
    """p * p^-1 is the identity."""
    p = from_cycles([(1, 3, 4, 2)], 5)
    assert (p * p.inverse()).is_identity()
    assert p.first_moved() == 1


def test_schreier_sims_order_of_symmetric_group():
    """A transposition and an n-cycle give order n!."""
    bsgs = schreier_sims([from_cycles([(1, 2)], 6), from_cycles([(1, 2, 3, 4, 5, 6)], 6)])
    assert group_order(bsgs) == math.factorial(6)


def test_schreier_sims_order_of_dihedral_group():
    """The two reflections of a hexagon generate a group of order 12."""
    r = from_cycles([(2, 6), (3, 5)], 6)
    s = from_cycles([(1, 2), (3, 6), (4, 5)], 6)
    bsgs = schreier_sims([r, s])
    assert group_order(bsgs) == 12
    assert contains(bsgs, r * s)
    assert not contains(bsgs, from_cycles([(1, 2)], 6))


def test_schreier_sims_agrees_with_closure():
    """Order from the strong generating set matches brute-force closure."""
    gens = [from_cycles([(1, 2, 3)], 5), from_cycles([(3, 4, 5)], 5)]
    assert group_order(schreier_sims(gens)) == len(closure(gens, 5)) == 60


def test_lemma_generators_odd_formulas():
    """For n=5 the three reflections match their printed cycles."""
    r1, r2, r3 = lemma_generators(5, "odd")
    assert format_cycles(r1) == "(1 5)(2 4)"
    assert format_cycles(r2) == "(2 5)(3 4)"
    assert format_cycles(r3) == "(2 4)"


def test_lemma_generators_even_formulas():
    """For n=6 the three reflections match their printed cycles."""
    r1, r2, r3 = lemma_generators(6, "even")
    assert format_cycles(r1) == "(1 6)(2 5)(3 4)"
    assert format_cycles(r2) == "(2 6)(3 5)"
    assert format_cycles(r3) == "(2 5)(3 4)"


def test_lemma_generators_rejects_parity_mismatch():
    """Asking for odd-mode generators on an even n raises ParityMismatchError."""
    with pytest.raises(ParityMismatchError):
        lemma_generators(4, "odd")


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
def test_symn_generated_odd(n):
    """The odd-mode reflections generate Sym_n."""
    assert symn_generated(n, "odd")


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
def test_symn_generated_even(n):
    """The even-mode reflections generate Sym_n."""
    assert symn_generated(n, "even")
