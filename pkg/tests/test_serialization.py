import json

import pytest

from schublines.cli import \
    certificate_from_dict, certificate_to_dict, dump_certificate, \
    load_certificate
from schublines.galois import Verifier, validate_certificate
from schublines.utils import CertificateError

@pytest.fixture
def cert():
    return Verifier().verify((2, 2, 1, 2, 3))

def test_leaf_document():
    doc = certificate_to_dict(Verifier().verify((2, 2)))
    assert doc == {
        "schema": 1,
        "problem": [2, 2],
        "kostka": "1",
        "clause": "base-small-k",
    }

def test_split_document(cert):
    doc = certificate_to_dict(cert)
    assert doc["schema"] == 1
    assert doc["kostka"] == "5"
    assert doc["clause"] == "unequal-branches"
    assert doc["rearrangement"] == [2, 2, 1, 2, 3]
    assert doc["merged"]["problem"] == [5, 2, 2, 1]
    assert doc["decremented"]["problem"] == [2, 2, 2, 1, 1]
    assert "schema" not in doc["merged"]

def test_parse_serialize(cert):
    parsed = certificate_from_dict(json.loads(json.dumps(
        certificate_to_dict(cert)
    )))
    assert parsed == cert
    assert validate_certificate(parsed)

def test_file_round_trip(cert, tmp_path):
    path = tmp_path / "cert.json"
    dump_certificate(cert, path)
    assert load_certificate(path) == cert

def test_tampered_document_fails_validation(cert):
    doc = certificate_to_dict(cert)
    doc["merged"]["kostka"] = "2"
    with pytest.raises(CertificateError):
        validate_certificate(certificate_from_dict(doc))

@pytest.mark.parametrize("mutate", [
    lambda doc: doc.pop("schema"),
    lambda doc: doc.update(schema=2),
    lambda doc: doc.update(kostka=5),
    lambda doc: doc.update(kostka="five"),
    lambda doc: doc.update(clause="no-such-clause"),
    lambda doc: doc.update(problem=[1, 2]),
    lambda doc: doc.pop("merged"),
    lambda doc: doc.update(decremented=[1, 1]),
    lambda doc: doc["merged"].pop("problem"),
])
def test_malformed_documents(cert, mutate):
    doc = certificate_to_dict(cert)
    mutate(doc)
    with pytest.raises(CertificateError):
        certificate_from_dict(doc)

def test_load_rejects_non_json(tmp_path):
    path = tmp_path / "cert.json"
    path.write_text("{not json")
    with pytest.raises(CertificateError):
        load_certificate(path)
