import random

import pytest

from highertorsion.errors import RepParseError
from highertorsion.repexpr import (
    Dual,
    Ext,
    Std,
    Sum,
    Sym,
    Tensor,
    Weights,
    parse_rep,
)
from highertorsion.reps import dual, std_rep, sym_power, tensor


def test_parse_std():
    assert parse_rep("std(3)") == Std(3)
    assert parse_rep("  std( 3 ) ") == Std(3)


def test_parse_sum_of_sym_and_dual():
    got = parse_rep("sym2(std(2)) + dual(std(2))")
    assert got == Sum(Sym(2, Std(2)), Dual(Std(2)))


def test_parse_weight_set():
    got = parse_rep("{(1,0):2, (0,1)}")
    assert got == Weights((((0, 1), 1), ((1, 0), 2)))
    rep = got.to_representation()
    assert rep.weights == {(1, 0): 2, (0, 1): 1}


def test_parse_negative_weights():
    got = parse_rep("{(-1306,7)}")
    assert got.to_representation().weights == {(-1306, 7): 1}


def test_parse_tensor_and_ext():
    got = parse_rep("tensor(std(2), dual(std(2))) + ext2(std(2))")
    assert got == Sum(Tensor(Std(2), Dual(Std(2))), Ext(2, Std(2)))
    rep = got.to_representation()
    expected = tensor(std_rep(2), dual(std_rep(2)))
    assert rep.multiplicity((0, 0)) == expected.multiplicity((0, 0))


def test_evaluation_matches_library():
    rep = parse_rep("sym2(std(2))").to_representation()
    assert rep == sym_power(std_rep(2), 2)


def test_rank_mismatch_names_both_ranks():
    with pytest.raises(RepParseError) as err:
        parse_rep("std(2) + std(3)")
    assert "2" in str(err.value) and "3" in str(err.value)


def test_errors_carry_offsets():
    with pytest.raises(RepParseError) as err:
        parse_rep("std(x)")
    assert err.value.offset == 4
    with pytest.raises(RepParseError) as err:
        parse_rep("{(1,0):0}")
    assert err.value.offset > 0


def test_trailing_garbage_rejected():
    with pytest.raises(RepParseError):
        parse_rep("std(2) junk")


def test_delimiter_mutations_rejected():
    # every mutation of a valid input that breaks a delimiter must fail
    valid = [
        "std(3)",
        "sym2(std(2)) + dual(std(2))",
        "{(1,0):2, (0,1)}",
        "tensor(std(2), ext1(std(2)))",
    ]
    delimiters = "(){},:"
    rng = random.Random(13)
    for text in valid:
        parse_rep(text)
        positions = [i for i, ch in enumerate(text) if ch in delimiters]
        for pos in positions:
            broken = text[:pos] + text[pos + 1:]  # delete the delimiter
            with pytest.raises(RepParseError):
                parse_rep(broken)
            replacement = rng.choice("!;?")
            broken = text[:pos] + replacement + text[pos + 1:]
            with pytest.raises(RepParseError):
                parse_rep(broken)
