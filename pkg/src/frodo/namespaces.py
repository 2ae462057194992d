"""Namespace constants: W3C vocabularies plus the machine reader's namespaces.

The machine reader mints entity IRIs in a local namespace (prefix ``fred:``)
and links frame occurrences to their arguments through VerbNet role
predicates (prefix ``vn.role:``).  Deployments can remap the local namespace,
so everything that depends on it takes it as a parameter with these values
as defaults.
"""

from .rdf import Iri

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"

FRED_NS = "http://www.ontologydesignpatterns.org/ont/fred/domain.owl#"
DUL_NS = "http://www.ontologydesignpatterns.org/ont/dul/DUL.owl#"
VN_ROLE_NS = "http://www.ontologydesignpatterns.org/ont/vn/abox/role/"

RDF_TYPE = Iri(RDF_NS + "type")
RDFS_SUBCLASSOF = Iri(RDFS_NS + "subClassOf")
RDFS_LABEL = Iri(RDFS_NS + "label")
RDFS_DOMAIN = Iri(RDFS_NS + "domain")
RDFS_RANGE = Iri(RDFS_NS + "range")

OWL_CLASS = Iri(OWL_NS + "Class")
OWL_OBJECT_PROPERTY = Iri(OWL_NS + "ObjectProperty")
OWL_DATATYPE_PROPERTY = Iri(OWL_NS + "DatatypeProperty")
OWL_THING = Iri(OWL_NS + "Thing")
OWL_ONTOLOGY = Iri(OWL_NS + "Ontology")
OWL_RESTRICTION = Iri(OWL_NS + "Restriction")
OWL_ON_PROPERTY = Iri(OWL_NS + "onProperty")
OWL_SOME_VALUES_FROM = Iri(OWL_NS + "someValuesFrom")
OWL_INVERSE_OF = Iri(OWL_NS + "inverseOf")

DUL_EVENT = Iri(DUL_NS + "Event")

# Prefixes bundled for serializing machine-reader style graphs.
WELL_KNOWN_PREFIXES = {
    "rdf": RDF_NS,
    "rdfs": RDFS_NS,
    "owl": OWL_NS,
    "xsd": XSD_NS,
    "fred": FRED_NS,
    "dul": DUL_NS,
    "vn.role": VN_ROLE_NS,
}
