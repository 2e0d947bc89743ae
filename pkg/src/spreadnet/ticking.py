"""Ticking domains, vector clocks, the mixing operation and ticking maps.

A word is a tuple of letters (transition labels).  A ticking domain fixes a
suffix-stable equivalence on words over a component alphabet and exposes a
canonical representative per class: the lexicographically least among the
shortest members.  A vector clock holds one canonical word per component.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (KNotInJ, LetterOutsideAlphabet, MissingClock, NotARun,
                     TableMiss, WordTooLong)
from .mcnets import ComponentAutomaton

Word = tuple
EPSILON: Word = ()


def word(text: Iterable[str]) -> Word:
    """Build a word from an iterable of letters (a string works letterwise)."""
    return tuple(text)


class TickingDomain:
    """Base interface: canonical representatives of word classes."""

    alphabet: frozenset

    def canonical(self, w: Word) -> Word:
        raise NotImplementedError

    def same_class(self, u: Word, v: Word) -> bool:
        return self.canonical(u) == self.canonical(v)

    def _check_letters(self, w: Word) -> None:
        for a in w:
            if a not in self.alphabet:
                raise LetterOutsideAlphabet(f"letter {a!r} not in {sorted(self.alphabet)}")


@dataclass(frozen=True)
class FreeDomain(TickingDomain):
    """Empty equation set: every word is alone in its class."""

    alphabet: frozenset

    def canonical(self, w: Word) -> Word:
        self._check_letters(w)
        return w


@dataclass(frozen=True)
class TrellisDomain(TickingDomain):
    """Two runs are equivalent iff they have the same length and end in the
    same place of the component automaton."""

    automaton: ComponentAutomaton

    @property
    def alphabet(self) -> frozenset:  # type: ignore[override]
        return self.automaton.alphabet

    @cached_property
    def _step(self) -> dict:
        # label -> (source place, target place); labels are injective per component
        table = {}
        net = self.automaton.net
        for t in net.transitions:
            (src,) = net.pre(t)
            (dst,) = net.post(t)
            table[net.label(t)] = (src, dst)
        return table

    def target(self, w: Word) -> str:
        """The place reached by running ``w`` from the initial place."""
        self._check_letters(w)
        place = self.automaton.initial_place
        for a in w:
            src, dst = self._step[a]
            if src != place:
                raise NotARun(f"{''.join(w)} is not a run of component "
                              f"{self.automaton.index}")
            place = dst
        return place

    @cached_property
    def _min_words(self) -> list:
        # _min_words[k][place] = lex-least run of length k ending at place;
        # grown on demand, one level per word length.
        return [{self.automaton.initial_place: EPSILON}]

    def _min_word(self, place: str, length: int) -> Word:
        levels = self._min_words
        while len(levels) <= length:
            prev = levels[-1]
            nxt: dict = {}
            for src, w in prev.items():
                for a in sorted(self._step):
                    s, dst = self._step[a]
                    if s != src:
                        continue
                    cand = w + (a,)
                    if dst not in nxt or cand < nxt[dst]:
                        nxt[dst] = cand
            levels.append(nxt)
        return levels[length][place]

    def canonical(self, w: Word) -> Word:
        return self._min_word(self.target(w), len(w))

    def same_class(self, u: Word, v: Word) -> bool:
        return len(u) == len(v) and self.target(u) == self.target(v)


class _WordUnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, w):
        parent = self.parent
        root = w
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(w, w) != w:
            parent[w], w = root, parent[w]
        return root

    def union(self, u, v) -> bool:
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return False
        # keep the (shortest, lex-least) member as the root
        if (len(rv), rv) < (len(ru), ru):
            ru, rv = rv, ru
        self.parent[rv] = ru
        return True


@dataclass(frozen=True)
class EquationDomain(TickingDomain):
    """Word classes generated by a finite equation set, closed under suffix
    extension, bounded to words of length at most ``max_word_len``.

    The closure is computed eagerly by union-find over all bounded words,
    re-propagating suffix extensions until fixpoint.
    """

    alphabet: frozenset
    equations: tuple  # (Word, Word) pairs
    max_word_len: int

    @staticmethod
    def build(alphabet: Iterable[str],
              equations: Iterable[tuple],
              max_word_len: int) -> "EquationDomain":
        eqs = tuple(sorted((tuple(a), tuple(b)) for a, b in equations))
        dom = EquationDomain(frozenset(alphabet), eqs, max_word_len)
        dom._canonical_cache  # computed eagerly; rejects oversized equations
        return dom

    @cached_property
    def _canonical_cache(self) -> dict:
        letters = sorted(self.alphabet)
        uf = _WordUnionFind()
        words = [EPSILON]
        for n in range(1, self.max_word_len + 1):
            words.extend(itertools.product(letters, repeat=n))
        for u, v in self.equations:
            self._check_letters(u)
            self._check_letters(v)
            if max(len(u), len(v)) > self.max_word_len:
                raise WordTooLong(f"equation side longer than bound {self.max_word_len}")
            uf.union(u, v)
        changed = True
        while changed:
            changed = False
            classes: dict = {}
            for w in words:
                classes.setdefault(uf.find(w), []).append(w)
            for members in classes.values():
                if len(members) < 2:
                    continue
                base = members[0]
                for other in members[1:]:
                    if max(len(base), len(other)) + 1 > self.max_word_len:
                        continue
                    for a in letters:
                        changed |= uf.union(base + (a,), other + (a,))
        return {w: uf.find(w) for w in words}

    def canonical(self, w: Word) -> Word:
        self._check_letters(w)
        if len(w) > self.max_word_len:
            raise WordTooLong(f"|{''.join(w)}| > {self.max_word_len}")
        return self._canonical_cache[w]

    def classes(self) -> dict:
        """Canonical representative -> sorted tuple of class members."""
        out: dict = {}
        for w, rep in self._canonical_cache.items():
            out.setdefault(rep, []).append(w)
        return {rep: tuple(sorted(ws)) for rep, ws in out.items()}


def canonical(dom: TickingDomain, w: Word) -> Word:
    return dom.canonical(w)


def same_class(dom: TickingDomain, u: Word, v: Word) -> bool:
    return dom.same_class(u, v)


VectorClock = tuple  # one canonical word per component, index order 1..dim


@dataclass(frozen=True)
class VectorClockDomain:
    """Product of per-component ticking domains."""

    domains: tuple

    @staticmethod
    def of(domains: Sequence[TickingDomain]) -> "VectorClockDomain":
        return VectorClockDomain(tuple(domains))

    @property
    def dimension(self) -> int:
        return len(self.domains)

    def domain(self, index: int) -> TickingDomain:
        return self.domains[index - 1]

    def eps(self) -> VectorClock:
        return (EPSILON,) * self.dimension

    def canonical_clock(self, clock: Sequence[Word]) -> VectorClock:
        return tuple(d.canonical(w) for d, w in zip(self.domains, clock))

    def same_clock(self, a: Sequence[Word], b: Sequence[Word]) -> bool:
        return all(d.same_class(u, v) for d, u, v in zip(self.domains, a, b))


def op_mix(vcd: VectorClockDomain, gamma: Mapping[int, VectorClock],
           J: Iterable[int], k: int) -> VectorClock:
    """Mix the clocks contributed by components ``J``: entry ``i`` of the
    result comes from contributor ``i`` when ``i`` is in ``J`` and from
    contributor ``k`` otherwise."""
    J = frozenset(J)
    if k not in J:
        raise KNotInJ(f"selector {k} not in index set {sorted(J)}")
    if set(gamma) != J:
        raise MissingClock(f"clock map keys {sorted(gamma)} != index set {sorted(J)}")
    entries = []
    for i in range(1, vcd.dimension + 1):
        source = gamma[i] if i in J else gamma[k]
        entries.append(source[i - 1])
    return vcd.canonical_clock(entries)


@dataclass(frozen=True)
class TickingMap:
    """Per-component clock update applied when a transition fires.

    Kinds: ``append-matching`` appends the label to every entry whose
    alphabet contains it; ``append-local-reset`` appends to this component's
    entry and resets the others to the empty word; ``constant-eps`` returns
    the all-empty clock; ``table`` looks the pair up in an explicit table.
    """

    kind: str
    component: int
    table: tuple = field(default=(), repr=False)

    APPEND_MATCHING = "append-matching"
    APPEND_LOCAL_RESET = "append-local-reset"
    CONSTANT_EPS = "constant-eps"
    TABLE = "table"

    @cached_property
    def _table(self) -> dict:
        return dict(self.table)

    def __call__(self, vcd: VectorClockDomain, alpha: VectorClock,
                 trans: str, label: str) -> VectorClock:
        if self.kind == self.APPEND_MATCHING:
            entries = []
            for i in range(1, vcd.dimension + 1):
                w = alpha[i - 1]
                if label in vcd.domain(i).alphabet:
                    w = w + (label,)
                entries.append(w)
            return vcd.canonical_clock(entries)
        if self.kind == self.APPEND_LOCAL_RESET:
            entries = [EPSILON] * vcd.dimension
            entries[self.component - 1] = alpha[self.component - 1] + (label,)
            return vcd.canonical_clock(entries)
        if self.kind == self.CONSTANT_EPS:
            return vcd.eps()
        if self.kind == self.TABLE:
            try:
                target = self._table[(alpha, trans)]
            except KeyError:
                raise TableMiss(f"no table entry for ({alpha}, {trans})") from None
            return vcd.canonical_clock(target)
        raise ValueError(f"unknown ticking map kind {self.kind!r}")


def tick(tau: TickingMap, vcd: VectorClockDomain, alpha: VectorClock,
         trans: str, label: str) -> VectorClock:
    return tau(vcd, alpha, trans, label)
