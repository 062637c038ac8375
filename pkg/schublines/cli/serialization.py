"""
Certificate JSON schema.

A certificate is one JSON document. Its root carries `"schema": 1`; every
node, the root included, is an object with the keys

- `problem`: the certified problem, a weakly decreasing integer array;
- `kostka`: the count of its reduction, a decimal string;
- `clause`: "base-small-k", "both-branches-one" or "unequal-branches";
- `rearrangement`, `merged`, `decremented`: the reduced problem listed with
the split pair last, and the nodes of both branches; absent on
base-small-k leaves.
"""
import json
from pathlib import Path
from typing import Dict, Union

from schublines.galois import AlternatingCertificate, Clause
from schublines.kostka import Rearrangement, SchubertProblem, reduce
from schublines.utils import \
    CERTIFICATE_SCHEMA_VERSION, CertificateError, SchublinesError

def _node_to_dict(cert: AlternatingCertificate) -> Dict:
    node = {
        "problem": list(cert.problem.conditions),
        "kostka": str(cert.kostka_value),
        "clause": cert.clause.value,
    }
    if not cert.is_leaf:
        node["rearrangement"] = list(cert.rearrangement.conditions)
        node["merged"] = _node_to_dict(cert.merged_child)
        node["decremented"] = _node_to_dict(cert.decremented_child)
    return node

def certificate_to_dict(cert: AlternatingCertificate) -> Dict:
    """
    JSON-ready dictionary of a certificate tree.

    Example:
    certificate_to_dict(verify_at_least_alternating((2, 2)))
    # {'schema': 1, 'problem': [2, 2], 'kostka': '1',
    #  'clause': 'base-small-k'}
    """
    return {"schema": CERTIFICATE_SCHEMA_VERSION, **_node_to_dict(cert)}

def _node_from_dict(node: Dict) -> AlternatingCertificate:
    if not isinstance(node, dict):
        raise CertificateError(f"certificate node is not an object: {node!r}")
    try:
        problem = SchubertProblem(tuple(node["problem"]))
        if not isinstance(node["kostka"], str):
            raise CertificateError(
                f"kostka must be a decimal string, got {node['kostka']!r}"
            )
        kostka_value = int(node["kostka"])
        clause = Clause(node["clause"])
        reduced = reduce(problem)
    except KeyError as e:
        raise CertificateError(f"certificate node without key {e}") from e
    except (SchublinesError, TypeError, ValueError) as e:
        if isinstance(e, CertificateError):
            raise
        raise CertificateError(f"malformed certificate node: {e}") from e

    if clause is Clause.BASE_SMALL_K:
        return AlternatingCertificate(problem, reduced, kostka_value, clause)

    try:
        rearrangement = Rearrangement(tuple(node["rearrangement"]))
        merged, decremented = node["merged"], node["decremented"]
    except KeyError as e:
        raise CertificateError(
            f"{clause.value} node without key {e}"
        ) from e
    except (SchublinesError, TypeError) as e:
        raise CertificateError(f"malformed rearrangement: {e}") from e

    return AlternatingCertificate(
        problem, reduced, kostka_value, clause, rearrangement,
        _node_from_dict(merged), _node_from_dict(decremented)
    )

def certificate_from_dict(doc: Dict) -> AlternatingCertificate:
    """
    Inverse of `certificate_to_dict`. The decoded tree is not validated;
    call `validate_certificate` on it.

    Raises:
    - CertificateError: On a missing or unknown schema version, or a
    malformed node.
    """
    if not isinstance(doc, dict) or "schema" not in doc:
        raise CertificateError("certificate without schema version")
    if doc["schema"] != CERTIFICATE_SCHEMA_VERSION:
        raise CertificateError(
            f"unsupported certificate schema {doc['schema']!r}, expected "
            f"{CERTIFICATE_SCHEMA_VERSION}"
        )
    return _node_from_dict(doc)

def dump_certificate(
    cert: AlternatingCertificate,
    path: Union[Path, str]
) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(certificate_to_dict(cert), handle, indent=1)
        handle.write("\n")

def load_certificate(path: Union[Path, str]) -> AlternatingCertificate:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except json.JSONDecodeError as e:
        raise CertificateError(f"{path}: not a JSON document ({e})") from e
    return certificate_from_dict(doc)
