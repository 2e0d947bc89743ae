import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spreadnet import (
    EPSILON,
    EquationDomain,
    FreeDomain,
    KNotInJ,
    LetterOutsideAlphabet,
    MissingClock,
    NotARun,
    TableMiss,
    TickingMap,
    TrellisDomain,
    VectorClockDomain,
    WordTooLong,
    components,
    op_mix,
    running_example,
    running_example_custom_mode,
    word,
)


def equation_domains():
    """The finite-equation domains exercised across the test suite."""
    custom = running_example_custom_mode()
    domains = [EquationDomain.build(spec.alphabet, spec.equations,
                                    spec.max_word_len)
               for spec in custom.components]
    domains.append(EquationDomain.build(
        "suvw",
        [(word("uu"), word("u")), (word("usv"), word("us")),
         (word("usu"), word("us")), (word("uss"), word("us")),
         (word("vs"), word("v")), (word("vu"), word("v")),
         (word("vv"), word("v")), (word("s"), EPSILON)],
        max_word_len=3))
    domains.append(EquationDomain.build(
        "suw",
        [(word("u"), word("w")), (word("us"), word("ws")),
         (word("s"), EPSILON), (word("su"), EPSILON),
         (word("sw"), EPSILON), (word("uu"), word("u")),
         (word("uw"), word("u"))],
        max_word_len=3))
    domains.append(EquationDomain.build("w", [(EPSILON, word("w"))],
                                        max_word_len=2))
    rng = random.Random(11)
    for _ in range(10):
        letters = "abc"[:rng.randint(1, 3)]
        eqs = [(tuple(rng.choice(letters) for _ in range(rng.randint(0, 3))),
                tuple(rng.choice(letters) for _ in range(rng.randint(0, 3))))
               for _ in range(rng.randint(0, 4))]
        domains.append(EquationDomain.build(letters, eqs, max_word_len=3))
    return domains


def assert_suffix_stable(dom):
    """Exhaustive bounded check: equivalent words stay equivalent under any
    one-letter extension that fits the bound."""
    classes = dom.classes()
    for members in classes.values():
        for u in members:
            for v in members:
                if max(len(u), len(v)) + 1 > dom.max_word_len:
                    continue
                for a in sorted(dom.alphabet):
                    assert dom.same_class(u + (a,), v + (a,)), (u, v, a)


def assert_canonical_is_class_function(dom):
    for rep, members in dom.classes().items():
        assert rep in members
        assert rep == min(members, key=lambda w: (len(w), w))
        for w in members:
            assert dom.canonical(w) == rep
            assert dom.canonical(rep) == rep


def test_free_domain_keeps_words_apart():
    dom = FreeDomain(frozenset("ab"))
    assert dom.canonical(word("ab")) == ("a", "b")
    assert not dom.same_class(word("a"), word("b"))
    with pytest.raises(LetterOutsideAlphabet):
        dom.canonical(word("ax"))


def test_trellis_domain_groups_by_length_and_target():
    aut1, _ = components(running_example())
    dom = TrellisDomain(aut1)
    assert dom.target(word("su")) == "c"
    assert dom.same_class(word("s"), word("t"))
    assert dom.same_class(word("suz"), word("tuz"))
    assert not dom.same_class(word("s"), word("suv"))  # same target, length 1 vs 3
    assert dom.canonical(word("t")) == word("s")
    assert dom.canonical(word("tuv")) == word("suv")
    with pytest.raises(NotARun):
        dom.target(word("u"))


def test_equation_domain_running_example_component_one():
    dom = equation_domains()[0]
    assert dom.canonical(word("t")) == word("s")
    assert dom.canonical(word("suzs")) == word("s")
    assert dom.canonical(word("tuzt")) == word("s")  # via suffix stability from s=t
    assert dom.canonical(word("suvu")) == word("su")
    assert dom.canonical(word("tuv")) == word("suv")
    assert dom.canonical(EPSILON) == EPSILON


def test_equation_domain_running_example_component_two():
    dom = equation_domains()[1]
    assert dom.same_class(word("uw"), word("uz"))
    assert dom.canonical(word("uzu")) == word("u")
    assert dom.canonical(word("uwu")) == word("u")
    assert dom.canonical(word("uwuw")) == dom.canonical(word("uzuz"))


def test_equation_domain_derives_unlisted_consequences():
    # with s = eps and su = eps, suffix stability forces u = eps too
    dom = equation_domains()[3]
    assert dom.same_class(word("su"), word("u"))
    assert dom.same_class(word("u"), EPSILON)
    assert dom.same_class(word("ws"), word("us"))


def test_equation_domain_word_length_bound():
    dom = EquationDomain.build("a", [], max_word_len=2)
    with pytest.raises(WordTooLong):
        dom.canonical(word("aaa"))
    with pytest.raises(WordTooLong):
        EquationDomain.build("a", [(word("aaa"), word("a"))], max_word_len=2)


def test_all_test_domains_are_suffix_stable():
    for dom in equation_domains():
        assert_suffix_stable(dom)


def test_canonical_is_a_class_function_on_all_test_domains():
    for dom in equation_domains():
        assert_canonical_is_class_function(dom)


@given(st.lists(st.tuples(st.text("ab", max_size=3), st.text("ab", max_size=3)),
                max_size=5))
@settings(max_examples=60, deadline=None)
def test_random_equation_sets_stay_suffix_stable(pairs):
    eqs = [(tuple(a), tuple(b)) for a, b in pairs]
    dom = EquationDomain.build("ab", eqs, max_word_len=3)
    assert_suffix_stable(dom)
    assert_canonical_is_class_function(dom)


def _free_vcd():
    return VectorClockDomain.of([FreeDomain(frozenset("ax")),
                                 FreeDomain(frozenset("by")),
                                 FreeDomain(frozenset("cz"))])


def test_op_mix_three_entry_example():
    # two contributors j1=1, j2=2 over a three-component clock: entries 1 and
    # 2 come from their own contributors, entry 3 from the selected one
    vcd = _free_vcd()
    gamma = {1: (word("a"), word("b"), word("c")),
             2: (word("x"), word("y"), word("z"))}
    assert op_mix(vcd, gamma, {1, 2}, 1) == (word("a"), word("y"), word("c"))
    assert op_mix(vcd, gamma, {1, 2}, 2) == (word("a"), word("y"), word("z"))


def test_op_mix_rejects_bad_selector():
    vcd = _free_vcd()
    gamma = {1: vcd.eps(), 2: vcd.eps()}
    with pytest.raises(KNotInJ):
        op_mix(vcd, gamma, {1, 2}, 3)
    with pytest.raises(MissingClock):
        op_mix(vcd, {1: vcd.eps()}, {1, 2}, 1)


def test_ticking_map_append_matching():
    vcd = VectorClockDomain.of([FreeDomain(frozenset("su")),
                                FreeDomain(frozenset("uw"))])
    tau = TickingMap(TickingMap.APPEND_MATCHING, 1)
    assert tau(vcd, vcd.eps(), "s", "s") == (word("s"), EPSILON)
    assert tau(vcd, (word("s"), EPSILON), "u", "u") == (word("su"), word("u"))


def test_ticking_map_append_local_reset():
    vcd = VectorClockDomain.of([FreeDomain(frozenset("su")),
                                FreeDomain(frozenset("uw"))])
    tau = TickingMap(TickingMap.APPEND_LOCAL_RESET, 2)
    assert tau(vcd, (word("s"), word("u")), "w", "w") == (EPSILON, word("uw"))


def test_ticking_map_constant_eps():
    vcd = _free_vcd()
    tau = TickingMap(TickingMap.CONSTANT_EPS, 1)
    assert tau(vcd, (word("a"), word("b"), word("c")), "a", "a") == vcd.eps()


def test_ticking_map_table():
    vcd = VectorClockDomain.of([FreeDomain(frozenset("a"))])
    tau = TickingMap(TickingMap.TABLE, 1,
                     table=((((EPSILON,), "t"), (word("a"),)),))
    assert tau(vcd, (EPSILON,), "t", "a") == (word("a"),)
    with pytest.raises(TableMiss):
        tau(vcd, (word("a"),), "t", "a")
