"""Plain-text lattice files.

::

    # the diamond
    lattice diamond
    elem 0 a b 1
    cover 0 a
    cover 0 b
    cover a 1
    cover b 1
    ortho a b
    end

Ids are whitespace-free tokens. ``ortho`` pairs are stated once each and
closed symmetrically; bottom and top are paired automatically when neither
is mentioned.
"""
from dataclasses import dataclass, field

from .errors import DuplicatePair, IncompleteInvolution, ParseError
from .lattice import build_from_covers
from .ortho import OrthoLattice, attach_orthocomplement


@dataclass
class LatticeFile:
    name: str
    elements: list = field(default_factory=list)
    covers: list = field(default_factory=list)
    ortho: list = field(default_factory=list)


def parse_lattice_text(text):
    """Syntax-level parse; no lattice axioms are checked here."""
    out = None
    seen_elem, seen_cover, seen_ortho = set(), set(), set()
    partner = {}
    ended = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        if ended:
            raise ParseError("content after 'end'", lineno)
        word, args = line[0], line[1:]
        if word == "lattice":
            if out is not None:
                raise ParseError("second 'lattice' header", lineno)
            if len(args) != 1:
                raise ParseError("'lattice' takes exactly one name", lineno)
            out = LatticeFile(args[0])
            continue
        if out is None:
            raise ParseError(f"'{word}' before the 'lattice' header", lineno)
        if word == "elem":
            if not args:
                raise ParseError("'elem' needs at least one id", lineno)
            for a in args:
                if a in seen_elem:
                    raise ParseError(f"element {a} declared twice", lineno)
                seen_elem.add(a)
                out.elements.append(a)
        elif word in ("cover", "ortho"):
            if len(args) != 2:
                raise ParseError(f"'{word}' takes two ids", lineno)
            a, b = args
            for x in (a, b):
                if x not in seen_elem:
                    raise ParseError(f"unknown element {x}", lineno)
            if word == "cover":
                if (a, b) in seen_cover:
                    raise DuplicatePair(f"cover {a} {b} stated twice", lineno)
                seen_cover.add((a, b))
                out.covers.append((a, b))
            else:
                key = frozenset((a, b))
                if key in seen_ortho:
                    raise DuplicatePair(f"ortho pair {a} {b} stated twice", lineno)
                for x, y in ((a, b), (b, a)):
                    if partner.get(x, y) != y:
                        raise IncompleteInvolution(f"{x} is paired with both {partner[x]} and {y}", lineno)
                seen_ortho.add(key)
                partner[a], partner[b] = b, a
                out.ortho.append((a, b))
        elif word == "end":
            if args:
                raise ParseError("'end' takes no arguments", lineno)
            ended = True
        else:
            raise ParseError(f"unknown directive '{word}'", lineno)
    if out is None:
        raise ParseError("missing 'lattice' header")
    if not ended:
        raise ParseError("missing 'end'")
    if not out.elements:
        raise ParseError("no elements declared")
    return out


def build(parsed):
    """Lattice (or OrthoLattice) from a parsed file; lattice errors propagate."""
    L = build_from_covers(parsed.elements, parsed.covers)
    if parsed.ortho:
        named = {x for pair in parsed.ortho for x in pair}
        named |= {L.labels[L.bottom], L.labels[L.top]}
        missing = [e for e in parsed.elements if e not in named]
        if missing:
            raise IncompleteInvolution(f"no ortho pair for {missing[0]}")
        L = attach_orthocomplement(L, parsed.ortho)
    L.name = parsed.name
    return L


def parse_lattice_file(text):
    """``(lattice, perp)`` with ``perp`` a label map, or None without ``ortho`` lines."""
    L = build(parse_lattice_text(text))
    if isinstance(L, OrthoLattice):
        return L, {L.labels[i]: L.labels[int(p)] for i, p in enumerate(L.perp_map)}
    return L, None


def serialize(L, name=None):
    """Hasse covers plus each orthocomplement pair once.

    The bottom-top pair is implied and only written when it is the sole pair,
    so the file still marks the lattice as orthocomplemented.
    """
    name = name or getattr(L, "name", None) or "lattice"
    lines = [f"lattice {name}", "elem " + " ".join(L.labels)]
    lines += [f"cover {L.labels[a]} {L.labels[b]}" for a, b in L.covers()]
    if isinstance(L, OrthoLattice):
        pairs = [(a, b) for a, b in L.perp_pairs() if {a, b} != {L.bottom, L.top}] or L.perp_pairs()
        lines += [f"ortho {L.labels[a]} {L.labels[b]}" for a, b in pairs]
    lines.append("end")
    return "\n".join(lines) + "\n"
