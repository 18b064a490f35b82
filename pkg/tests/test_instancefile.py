from pathlib import Path

import pytest
from hypothesis import given

from permcsp.core import PI_BTW, InvalidInstanceError, LoInstance, MixedInstance, PiSet, VarTable
from permcsp.instancefile import ParseError, canonical, parse, serialize

from .strategies import lo_instances, mixed_instances

GOLDEN = Path(__file__).parent / "data" / "golden"


def test_examples():
    inst = parse("pi 123,321\nk 1\ncon u v w")
    assert isinstance(inst, LoInstance)
    assert inst.pi == PI_BTW and inst.m == 1 and inst.k == 1
    mixed = parse("arc u v x3")
    assert isinstance(mixed, MixedInstance) and mixed.r == 3


def test_defaults_and_comments():
    inst = parse("# only a comment\n\ncon a b c\n")
    assert inst.pi == PiSet.from_words(["123"]) and inst.k == 0
    assert inst.vars.names == ("a", "b", "c")


@pytest.mark.parametrize("text,line", [
    ("con u u w", 1),
    ("k 1\nfrob a b", 2),
    ("con a b c x0", 1),
    ("con a b", 1),
    ("con a b c d e", 1),
    ("arc a b x-1", 1),
    ("pi 123,124", 1),
    ("pi 123,123", 1),
    ("pi 123\npi 321", 2),
    ("k -1", 1),
    ("k 1\nk 2", 2),
    ("con a b c\narc a b", 2),
    ("pi 123\narc a b", 1),
    ("btw a a b", 1),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_variable_named_like_a_multiplicity():
    inst = parse("con a b x3")
    assert inst.vars.names == ("a", "b", "x3") and inst.m == 1


def test_path_input(tmp_path):
    f = tmp_path / "one.txt"
    f.write_text("con a b c x2\n", encoding="utf-8")
    assert parse(f).m == 2


@given(lo_instances(pi=None))
def test_roundtrip_triples(inst):
    if inst.pi.mask == 0:
        with pytest.raises(InvalidInstanceError):
            serialize(inst)
        return
    once = canonical(inst)
    assert parse(serialize(once)) == once
    assert once.m == inst.m and once.k == inst.k and once.pi == inst.pi


@given(mixed_instances())
def test_roundtrip_mixed(mixed):
    if not (mixed.arcs or mixed.btws):
        # an empty mixed instance reads back as an empty triple instance
        assert isinstance(canonical(mixed), LoInstance)
        return
    once = canonical(mixed)
    assert parse(serialize(once)) == once
    assert (once.r, once.s, once.k) == (mixed.r, mixed.s, mixed.k)


def test_interleaved_mixed_file_roundtrips_exactly():
    text = "btw c a b\narc a b\narc d c x2\nbtw d a c\n"
    inst = parse(text)
    assert parse(serialize(inst)) == inst


def test_unwritable_names():
    bad = LoInstance.from_names([("#a", "c", "d")])
    with pytest.raises(InvalidInstanceError):
        serialize(bad)


def test_golden_corpus_roundtrip():
    files = sorted(GOLDEN.glob("*.txt"))
    assert len(files) == 20
    for f in files:
        inst = parse(f)
        assert parse(serialize(inst)) == inst, f.name


def test_golden_corpus_is_current():
    from permcsp.checks import golden_instances
    for name, text in golden_instances():
        assert (GOLDEN / name).read_text(encoding="utf-8") == text


def test_header_lines():
    text = serialize(LoInstance(VarTable(()), ()), ["first", ""])
    assert text.startswith("# first\n#\npi 123\nk 0\n")
