"""Normal-ordered differential operators on Laurent polynomials."""

import random

from toruslie import rat
from toruslie.weyl import (LaurentPoly, WeylOp, commutator, euler_image_span,
                           operator_apply, random_operator, twist_op)

ZERO2 = (rat(0), rat(0))


def test_laurent_poly_arithmetic():
    p = LaurentPoly.monomial((1, 0)) + LaurentPoly.monomial((0, 2), 3)
    q = LaurentPoly.monomial((1, 0), -1)
    assert (p + q) == LaurentPoly.monomial((0, 2), 3)
    assert p.scaled(0) == LaurentPoly()
    assert p.scaled(2)[(0, 2)] == 6


def test_normal_ordering_euler_past_monomial():
    # d_1 x^(1,0) = x^(1,0) d_1 + x^(1,0)
    prod = WeylOp.euler(1, 2) * WeylOp.word((1, 0), (0, 0))
    want = WeylOp.make({((1, 0), (1, 0)): rat(1), ((1, 0), (0, 0)): rat(1)})
    assert prod == want


def test_word_rejects_negative_derivative_powers():
    try:
        WeylOp.word((0, 0), (-1, 0))
    except ValueError:
        pass
    else:
        raise AssertionError("negative derivative power accepted")


def test_operator_apply_euler_eigenvalue():
    # d_i acts on x^r as multiplication by r_i - twist_i
    p = LaurentPoly.monomial((0, 0))
    out = operator_apply(WeylOp.euler(1, 2), p, (rat(1, 2), rat(0)))
    assert out == p.scaled(rat(-1, 2))
    out2 = operator_apply(WeylOp.euler(2, 2), LaurentPoly.monomial((3, -2)), ZERO2)
    assert out2 == LaurentPoly.monomial((3, -2), -2)


def test_operator_apply_monomial_shifts():
    p = LaurentPoly.monomial((1, 1), 5)
    out = operator_apply(WeylOp.word((2, -1), (0, 0)), p, ZERO2)
    assert out == LaurentPoly.monomial((3, 0), 5)


def test_apply_respects_operator_product():
    rng = random.Random(3)
    twist = (rat(1, 3), rat(1, 2))
    for _ in range(40):
        y1 = random_operator(rng, 2)
        y2 = random_operator(rng, 2)
        p = LaurentPoly.monomial(tuple(rng.randint(-2, 2) for _ in range(2)),
                                 rng.randint(1, 4))
        lhs = operator_apply(y1 * y2, p, twist)
        rhs = operator_apply(y1, operator_apply(y2, p, twist), twist)
        assert lhs == rhs


def test_commutator_antisymmetry_and_jacobi():
    rng = random.Random(4)
    for _ in range(25):
        a, b, c = (random_operator(rng, 2) for _ in range(3))
        assert commutator(a, b) == commutator(b, a).scaled(-1)
        jac = (commutator(a, commutator(b, c))
               + commutator(b, commutator(c, a))
               + commutator(c, commutator(a, b)))
        assert jac == WeylOp()


def test_twist_shifts_euler_operators():
    twist = (rat(1, 2), rat(0))
    y = twist_op(WeylOp.euler(1, 2), twist)
    assert y == WeylOp.make({((0, 0), (1, 0)): rat(1),
                             ((0, 0), (0, 0)): rat(-1, 2)})
    # twisted application agrees with applying the twisted operator plainly
    rng = random.Random(5)
    for _ in range(20):
        op = random_operator(rng, 2)
        p = LaurentPoly.monomial(tuple(rng.randint(-2, 2) for _ in range(2)))
        assert operator_apply(op, p, twist) == operator_apply(
            twist_op(op, twist), p, ZERO2)


def test_euler_image_span_ranks():
    # images of the Euler operators over a 5x5 exponent window:
    # one degree drops iff some exponent matches the twist exactly
    assert euler_image_span(ZERO2, 2, 2).rank == 24
    assert euler_image_span((rat(1, 3), rat(1, 2)), 2, 2).rank == 25
    assert euler_image_span((rat(5), rat(5)), 2, 2).rank == 25
