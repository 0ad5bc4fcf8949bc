"""Negation table: negates() against an evaluation oracle for every operator pair"""

import itertools

import pytest

from condlint.detectors.helpers import negates
from condlint.frontend import chains_walk, parse_module
from condlint.frontend.ir import CompareOp

# Operand texts with distinct fingerprints; no literals so `is` stays warning-free
OPERANDS: tuple[str, ...] = (
    "x",
    "len(arr)",
    "arr[0]",
    "obj.attr",
    "f(a, b)",
    "n + 1",
    "k * 2",
    "obj.attr[i]",
    "items",
    "count",
    "-n",
    "total - step",
    "name.lower()",
    "d[key]",
    "xs[-1]",
    "a.b.c",
    "max(a, b)",
    "(p or q)",
    "row[i][j]",
    "fn()",
)

# Values chosen so every pair of non-complementary operators disagrees somewhere:
# 0 and 0.0 are equal but not identical, tuples feed the membership operators.
_LEFT_VALUES: tuple[object, ...] = (0, 1, 2, 0.0)
_RIGHT_VALUES: tuple[object, ...] = (0, 1, 2, 0.0, (0,), (1, 2), ())


def _evaluate(op: CompareOp, left: object, right: object):
    try:
        return eval(f"left {op.value} right", {}, {"left": left, "right": right})
    except TypeError:
        return None


def complementary_oracle(first: CompareOp, second: CompareOp) -> bool:
    """Whether two operators always give opposite results where both evaluate"""
    compared = 0
    for left, right in itertools.product(_LEFT_VALUES, _RIGHT_VALUES):
        a = _evaluate(first, left, right)
        b = _evaluate(second, left, right)
        if a is None or b is None:
            continue
        compared += 1
        if a == b:
            return False
    return compared > 0


def _conditions(lhs: str, first: CompareOp, second: CompareOp, rhs: str):
    source = f"if {lhs} {first.value} {rhs}:\n    pass\nelif {lhs} {second.value} {rhs}:\n    pass\n"
    module = parse_module(source)
    assert module.is_valid, source
    chain = next(chains_walk(module.body)).chain
    return chain.branches[0].cond, chain.branches[1].cond


class TestOracle:
    """Sanity checks of the oracle itself"""

    def test_inverse_pairs_are_complementary(self):
        """Test the oracle confirms every declared inverse"""
        for op in CompareOp:
            assert complementary_oracle(op, op.inverse), op

    def test_equal_and_identity_distinguished(self):
        """Test == and is not are not treated as complements"""
        assert not complementary_oracle(CompareOp.NE, CompareOp.IS)


class TestNegationTable:
    """negates() matches the oracle on all operator pairs and operands"""

    @pytest.mark.parametrize(
        "first, second",
        list(itertools.product(CompareOp, CompareOp)),
        ids=lambda op: op.name,
    )
    def test_operator_pair(self, first, second):
        """Test one operator pair over twenty operand shapes"""
        expected = complementary_oracle(first, second)
        for index, lhs in enumerate(OPERANDS):
            rhs = OPERANDS[(index + 7) % len(OPERANDS)]
            a, b = _conditions(lhs, first, second, rhs)
            assert negates(a, b) is expected, f"{lhs} {first.value} {rhs} / {second.value}"
            assert negates(b, a) is expected

    def test_no_false_positive_on_different_operands(self):
        """Test complementary operators over different operands are not negations"""
        for op in CompareOp:
            source = f"if a {op.value} b:\n    pass\nelif a {op.inverse.value} c:\n    pass\n"
            chain = next(chains_walk(parse_module(source).body)).chain
            assert not negates(chain.branches[0].cond, chain.branches[1].cond)

    @pytest.mark.parametrize("operand", OPERANDS)
    def test_not_wrapping(self, operand):
        """Test `not (e)` negates `e` for every operand shape"""
        source = f"if {operand}:\n    pass\nelif not ({operand}):\n    pass\n"
        chain = next(chains_walk(parse_module(source).body)).chain
        plain, wrapped = chain.branches[0].cond, chain.branches[1].cond
        assert negates(plain, wrapped)
        assert negates(wrapped, plain)
        assert not negates(plain, plain)
