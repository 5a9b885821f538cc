"""Line-oriented text formats for automata and fooling certificates.

Automaton::

    type: nfa | idfa | cdfa
    alphabet: a b c
    states: 4
    initial: 0          # several states allowed for nfa
    final: 0 1 2 3
    trans: 0 a 1        # repeat for several NFA targets

Certificate (the empty word is spelled ``-``)::

    fooling: plain | extended
    claimed: 7
    A:                  # extended only; B: starts the second group
    pair: a aa
    u: bbb
    v: aaa
"""
from __future__ import annotations

from pathlib import Path

from .automata import Automaton, AutomatonError, Cdfa, Idfa, Nfa, bits, to_mask
from .fooling import FoolingCertificate

EPSILON = "-"


class ParseError(AutomatonError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _split_key(line: str, no: int) -> tuple[str, str]:
    if ":" not in line:
        raise ParseError(f"expected 'key: value', got {line!r}", no)
    key, _, value = line.partition(":")
    return key.strip(), value.strip()


def _int(token: str, no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", no) from None


def parse_automaton(text: str) -> Automaton:
    kind = alphabet = count = None
    initial: list[int] | None = None
    final: list[int] = []
    trans: list[tuple[int, str, int, int]] = []
    for no, line in _lines(text):
        key, value = _split_key(line, no)
        if key == "type":
            if value not in ("nfa", "idfa", "cdfa"):
                raise ParseError(f"unknown type {value!r}", no)
            kind = value
        elif key == "alphabet":
            alphabet = tuple(value.split())
        elif key == "states":
            count = _int(value, no, "states")
        elif key == "initial":
            initial = [_int(t, no, "initial state") for t in value.split()]
        elif key == "final":
            final = [_int(t, no, "final state") for t in value.split()]
        elif key == "trans":
            parts = value.split()
            if len(parts) != 3:
                raise ParseError("trans needs 'source symbol target'", no)
            trans.append((_int(parts[0], no, "source"), parts[1], _int(parts[2], no, "target"), no))
        else:
            raise ParseError(f"unknown key {key!r}", no)
    for name, val in (("type", kind), ("alphabet", alphabet), ("states", count)):
        if val is None:
            raise ParseError(f"missing '{name}'")
    if count > 0 and not initial:
        raise ParseError("missing 'initial'")
    initial = initial or []
    index = {a: i for i, a in enumerate(alphabet)}
    for q in initial + final:
        if not 0 <= q < count:
            raise ParseError(f"state {q} outside 0..{count - 1}")

    if kind == "nfa":
        rows = [[0] * len(alphabet) for _ in range(count)]
    else:
        rows = [[None] * len(alphabet) for _ in range(count)]
        if len(initial) > 1:
            raise ParseError(f"{kind} needs a single initial state")
    for p, sym, q, no in trans:
        if sym not in index:
            raise ParseError(f"symbol {sym!r} not in alphabet", no)
        if not (0 <= p < count and 0 <= q < count):
            raise ParseError(f"transition {p} {sym} {q} mentions unknown state", no)
        a = index[sym]
        if kind == "nfa":
            rows[p][a] |= 1 << q
        else:
            if rows[p][a] is not None and rows[p][a] != q:
                raise ParseError(f"second target for ({p}, {sym}) in a deterministic automaton", no)
            rows[p][a] = q
    try:
        if kind == "nfa":
            return Nfa(alphabet, tuple(map(tuple, rows)), to_mask(initial), to_mask(final))
        init = initial[0] if initial else None
        if kind == "cdfa":
            missing = [(p, alphabet[a]) for p, row in enumerate(rows) for a, t in enumerate(row) if t is None]
            if missing:
                raise ParseError(f"cdfa is missing transitions, e.g. {missing[0]}")
            return Cdfa(alphabet, tuple(map(tuple, rows)), init, to_mask(final))
        return Idfa(alphabet, tuple(map(tuple, rows)), init, to_mask(final))
    except ParseError:
        raise
    except AutomatonError as exc:
        raise ParseError(str(exc)) from None


def format_automaton(a: Automaton) -> str:
    if isinstance(a, Nfa):
        kind, initial = "nfa", list(bits(a.initial))
    else:
        kind = "cdfa" if isinstance(a, Cdfa) else "idfa"
        initial = [] if a.initial is None else [a.initial]
    lines = [
        f"type: {kind}",
        f"alphabet: {' '.join(a.alphabet)}",
        f"states: {a.num_states}",
        f"initial: {' '.join(map(str, initial))}".rstrip(),
        f"final: {' '.join(map(str, bits(a.final)))}".rstrip(),
    ]
    for p, row in enumerate(a.delta):
        for i, t in enumerate(row):
            targets = bits(t) if kind == "nfa" else ([] if t is None else [t])
            lines += [f"trans: {p} {a.alphabet[i]} {q}" for q in targets]
    return "\n".join(lines) + "\n"


def to_dot(a: Automaton, name: str = "A") -> str:
    """Graphviz rendering; no layout hints beyond left-to-right."""
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  __start [shape=point];"]
    initial = bits(a.initial) if isinstance(a, Nfa) else ([] if a.initial is None else [a.initial])
    for q in range(a.num_states):
        shape = "doublecircle" if a.final >> q & 1 else "circle"
        lines.append(f"  {q} [shape={shape}];")
    lines += [f"  __start -> {q};" for q in initial]
    for p, row in enumerate(a.delta):
        for i, t in enumerate(row):
            targets = bits(t) if isinstance(a, Nfa) else ([] if t is None else [t])
            lines += [f'  {p} -> {q} [label="{a.alphabet[i]}"];' for q in targets]
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_automaton(path) -> Automaton:
    return parse_automaton(Path(path).read_text(encoding="utf-8"))


def write_automaton(a: Automaton, path) -> None:
    Path(path).write_text(format_automaton(a), encoding="utf-8")


# --- certificates ------------------------------------------------------------------

def _word(token: str) -> str:
    return "" if token == EPSILON else token


def _spell(word: str) -> str:
    return word or EPSILON


def parse_certificate(text: str) -> FoolingCertificate:
    flavour = claimed = u = v = None
    groups: dict[str, list] = {"": [], "A": [], "B": []}
    group = ""
    for no, line in _lines(text):
        if line in ("A:", "B:"):
            group = line[0]
            continue
        key, value = _split_key(line, no)
        if key == "fooling":
            if value not in ("plain", "extended"):
                raise ParseError(f"unknown certificate kind {value!r}", no)
            flavour = value
        elif key == "claimed":
            claimed = _int(value, no, "claimed")
        elif key == "pair":
            parts = value.split()
            if len(parts) != 2:
                raise ParseError("pair needs two words", no)
            groups[group].append((_word(parts[0]), _word(parts[1])))
        elif key in ("u", "v"):
            parts = value.split()
            if len(parts) != 1:
                raise ParseError(f"{key} needs one word", no)
            if key == "u":
                u = _word(parts[0])
            else:
                v = _word(parts[0])
        else:
            raise ParseError(f"unknown key {key!r}", no)
    if flavour is None:
        raise ParseError("missing 'fooling'")
    if flavour == "plain":
        if groups["A"] or groups["B"] or u is not None or v is not None:
            raise ParseError("plain certificate with A/B/u/v entries")
        cert = FoolingCertificate.plain(groups[""])
    else:
        if groups[""]:
            raise ParseError("extended certificate pairs must sit under A: or B:")
        if u is None or v is None:
            raise ParseError("extended certificate needs u and v")
        cert = FoolingCertificate.extended(groups["A"], groups["B"], u, v)
    if claimed is not None and claimed != cert.claimed_bound:
        raise ParseError(f"claimed {claimed}, but the pairs give {cert.claimed_bound}")
    return cert


def format_certificate(cert: FoolingCertificate) -> str:
    def pairs(ps):
        return [f"pair: {_spell(x)} {_spell(y)}" for x, y in ps]

    if cert.split is None:
        lines = ["fooling: plain", f"claimed: {cert.claimed_bound}"] + pairs(cert.pairs)
    else:
        s = cert.split
        lines = ["fooling: extended", f"claimed: {cert.claimed_bound}", "A:"] + pairs(s.a)
        lines += ["B:"] + pairs(s.b) + [f"u: {_spell(s.u)}", f"v: {_spell(s.v)}"]
    return "\n".join(lines) + "\n"


def read_certificate(path) -> FoolingCertificate:
    return parse_certificate(Path(path).read_text(encoding="utf-8"))
