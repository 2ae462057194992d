"""frodo: draft OWL domain ontologies from competency questions.

The pipeline refactors the frame-based RDF graph a machine reader produces
for a competency question into an OWL ontology draft, serializes the draft
as Manchester syntax and Turtle, and scores ontologies with structural
metrics.
"""

__version__ = "0.1.0"

from .rdf import BlankNode, Graph, Iri, Literal, Triple, local_name, namespace_of
from .turtle import ParseError, parse_ntriples, parse_turtle, serialize_ntriples, serialize_turtle

__all__ = [
    "BlankNode",
    "Graph",
    "Iri",
    "Literal",
    "ParseError",
    "Triple",
    "local_name",
    "namespace_of",
    "parse_ntriples",
    "parse_turtle",
    "serialize_ntriples",
    "serialize_turtle",
    "__version__",
]
