"""Minimal RDF data model: terms, triples, and an immutable triple-set graph.

The model is deliberately small: IRIs, blank nodes, and literals, with the
graph queries the drafting pipeline needs (type lookup, transitive subclass
closure, namespace extraction).  Blank-node labels are treated as stable
per-graph identity, so serialize/parse round-trips preserve the triple set
exactly.  Graphs are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Optional, Union

_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")

_XSD_STRING = "http://www.w3.org/2001/XMLSchema#string"
_RDF_LANG_STRING = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString"


@dataclass(frozen=True)
class Iri:
    """An absolute IRI.  Equality is exact codepoint equality, no normalization."""

    value: str

    def __post_init__(self) -> None:
        if not _SCHEME_RE.match(self.value):
            raise ValueError(f"not an absolute IRI (missing scheme): {self.value!r}")
        if any(c in self.value for c in ' <>"{}|\\^`\n\t'):
            raise ValueError(f"illegal character in IRI: {self.value!r}")

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class BlankNode:
    label: str

    def __str__(self) -> str:
        return f"_:{self.label}"


@dataclass(frozen=True)
class Literal:
    """A literal with optional language tag or datatype.

    Plain literals and xsd:string literals are identified (datatype dropped);
    a language-tagged literal carries no explicit datatype (rdf:langString is
    implicit).
    """

    lexical: str
    language: Optional[str] = None
    datatype: Optional[Iri] = None

    def __post_init__(self) -> None:
        if self.language is not None:
            if self.datatype is not None and self.datatype.value != _RDF_LANG_STRING:
                raise ValueError("language-tagged literal cannot carry another datatype")
            object.__setattr__(self, "datatype", None)
        elif self.datatype is not None and self.datatype.value == _XSD_STRING:
            object.__setattr__(self, "datatype", None)

    def __str__(self) -> str:
        if self.language:
            return f'"{self.lexical}"@{self.language}'
        if self.datatype:
            return f'"{self.lexical}"^^<{self.datatype.value}>'
        return f'"{self.lexical}"'


Term = Union[Iri, BlankNode, Literal]


def term_sort_key(t: Term) -> tuple:
    """Total order over terms: IRIs, then blanks, then literals."""
    if isinstance(t, Iri):
        return (0, t.value, "", "")
    if isinstance(t, BlankNode):
        return (1, t.label, "", "")
    return (2, t.lexical, t.language or "", t.datatype.value if t.datatype else "")


@dataclass(frozen=True)
class Triple:
    subject: Term
    predicate: Iri
    object: Term

    def __post_init__(self) -> None:
        if isinstance(self.subject, Literal):
            raise ValueError("triple subject cannot be a literal")
        if not isinstance(self.predicate, Iri):
            raise ValueError("triple predicate must be an IRI")

    def sort_key(self) -> tuple:
        return (term_sort_key(self.subject), self.predicate.value, term_sort_key(self.object))


# Vocabulary IRIs the queries below depend on.
RDF_TYPE = Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#type")
RDFS_SUBCLASSOF = Iri("http://www.w3.org/2000/01/rdf-schema#subClassOf")


class Graph:
    """A duplicate-free set of triples plus a prefix map, immutable once built."""

    __slots__ = ("_triples", "_prefixes")

    def __init__(self, triples: Iterable[Triple] = (), prefixes: Optional[Mapping[str, str]] = None):
        self._triples = frozenset(triples)
        self._prefixes = MappingProxyType(dict(prefixes or {}))

    @property
    def triples(self) -> frozenset:
        return self._triples

    @property
    def prefixes(self) -> Mapping[str, str]:
        return self._prefixes

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __contains__(self, t: Triple) -> bool:
        return t in self._triples

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._triples == other._triples

    def __hash__(self) -> int:
        return hash(self._triples)

    def __repr__(self) -> str:
        return f"<Graph with {len(self._triples)} triples>"

    def sorted_triples(self) -> list:
        return sorted(self._triples, key=Triple.sort_key)

    def match(
        self,
        subject: Optional[Term] = None,
        predicate: Optional[Iri] = None,
        object: Optional[Term] = None,
    ) -> Iterator[Triple]:
        """Linear-scan pattern match; None is a wildcard.  Graphs here are tiny."""
        for t in self._triples:
            if subject is not None and t.subject != subject:
                continue
            if predicate is not None and t.predicate != predicate:
                continue
            if object is not None and t.object != object:
                continue
            yield t

    def types_of(self, node: Term) -> set:
        """Every IRI C with (node, rdf:type, C) in the graph."""
        return {t.object for t in self.match(node, RDF_TYPE) if isinstance(t.object, Iri)}

    def subclass_closure(self, c: Iri) -> set:
        """All classes reachable from c via one or more rdfs:subClassOf edges.

        c itself is excluded unless it is re-reached through a cycle.
        Terminates on cyclic graphs.
        """
        seen: set = set()
        frontier = [c]
        while frontier:
            node = frontier.pop()
            for t in self.match(node, RDFS_SUBCLASSOF):
                if isinstance(t.object, Iri) and t.object not in seen:
                    seen.add(t.object)
                    frontier.append(t.object)
        return seen


def namespace_of(iri: Iri) -> Iri:
    """Namespace part of an IRI: up to and including the last '#', else last '/'."""
    value = iri.value
    hash_pos = value.rfind("#")
    if hash_pos >= 0:
        return Iri(value[: hash_pos + 1])
    slash_pos = value.rfind("/")
    if slash_pos >= 0:
        return Iri(value[: slash_pos + 1])
    raise ValueError(f"IRI has no namespace separator ('#' or '/'): {value!r}")


def local_name(iri: Iri) -> str:
    """Local part of an IRI: everything after the namespace separator."""
    return iri.value[len(namespace_of(iri).value):]
