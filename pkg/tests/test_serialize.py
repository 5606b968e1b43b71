import json
from fractions import Fraction

import numpy as np
import pytest

from invgen import catalog as cat
from invgen.gen import check_certificate, d_I
from invgen.lifting import structured_dI_lower_bound, two_gen_dichotomy_check
from invgen.constructions import prop_geq_group
from invgen.modrep import meataxe_decompose, regular_module
from invgen.serialize import (
    cert_document,
    cert_from_document,
    decomp_document,
    dichotomy_document,
    dumps,
    lift_document,
    recheck_cert_document,
)


def roundtrip(doc):
    return json.loads(dumps(doc))


def test_dumps_is_canonical():
    a = dumps({"b": np.int64(2), "a": Fraction(1, 3), "c": np.arange(2)})
    assert a == '{"a":[1,3],"b":2,"c":[0,1]}\n'
    assert dumps({"a": 1, "b": 2}) == dumps({"b": 2, "a": 1})
    with pytest.raises(TypeError):
        dumps({"x": object()})


@pytest.mark.parametrize("expr", ["C4", "S3", "A4", "D4", cat.Q8, "x(C2,C2,C2)", "sdc(7,3,2)"])
def test_certificate_roundtrip_and_recheck(expr):
    g = cat.group(expr)
    _, cert = d_I(g)
    doc = roundtrip(cert_document(g, cert, expr))
    assert recheck_cert_document(doc) == []
    assert check_certificate(g, cert_from_document(doc))


def test_recheck_catches_tampering():
    g = cat.group("A4")
    _, cert = d_I(g)
    doc = roundtrip(cert_document(g, cert, "A4"))
    bad = json.loads(json.dumps(doc))
    bad["value"] = 1
    assert recheck_cert_document(bad)
    bad = json.loads(json.dumps(doc))
    bad["maximal_classes"] = bad["maximal_classes"][1:]
    assert recheck_cert_document(bad)
    bad = json.loads(json.dumps(doc))
    bad["refutations"] = bad["refutations"][:-1]
    assert recheck_cert_document(bad)
    bad = json.loads(json.dumps(doc))
    bad["evidence"] = [99]
    assert recheck_cert_document(bad)
    bad = json.loads(json.dumps(doc))
    bad["schema"] = "other/1"
    assert recheck_cert_document(bad)
    bad = json.loads(json.dumps(doc))
    bad["classes"][1]["size"] += 1
    assert recheck_cert_document(bad)


def test_decomposition_document():
    g = cat.group("S3")
    dec = meataxe_decompose(regular_module(g, 7))
    doc = roundtrip(decomp_document("S3", 6, dec, [1] * len(dec.components)))
    assert doc["schema"] == "decomp/1" and doc["q"] == 7
    assert doc["sum_n_squared"] == 6 == doc["sum_n_dim"]
    assert sorted(c["dim"] for c in doc["components"]) == [1, 1, 2]
    basis_rows = sum(len(c["basis"]) for c in doc["components"])
    assert basis_rows == 6


def test_lift_and_dichotomy_documents():
    cert = structured_dI_lower_bound(prop_geq_group(2), 2)
    doc = roundtrip(lift_document("geq(2)", cert))
    assert doc["schema"] == "lift/1" and doc["holds"] and len(doc["table"]) == len(cert.table)
    rep = two_gen_dichotomy_check(cat.group("sdc(7,3,2)"))
    d = roundtrip(dichotomy_document("sdc(7,3,2)", rep))
    assert d["schema"] == "dichotomy/1" and d["horn"] == 2 and d["q"] == 43
    assert d["lower_bound"]["holds"]
    assert all(row["reciprocal_sum"][0] < row["reciprocal_sum"][1] for row in d["counting"])
    first = roundtrip(dichotomy_document("S3", two_gen_dichotomy_check(cat.group("S3"))))
    assert first["horn"] == 1 and "q" not in first
