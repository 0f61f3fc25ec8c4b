"""JSON forms of witnesses, failure certificates and check reports."""
import json
from pathlib import Path
from typing import Any, Dict, Union

from core.errors import HilbertError, TableFormatError
from core.monomials import BiDegree
from core.witness import FailureCertificate, FerrersWitness
from tools.table_io import read_source


def witness_to_dict(witness: FerrersWitness) -> Dict[str, Any]:
    return {
        "bounds": [witness.bounds.a, witness.bounds.b],
        "alpha": witness.entries(),
    }


def witness_from_dict(data: Dict[str, Any]) -> FerrersWitness:
    """Inverse of witness_to_dict; also accepts a full ``check --json`` document.

    Raises:
        TableFormatError: if the document does not describe a witness
    """
    if "witness" in data and isinstance(data["witness"], dict):
        data = data["witness"]
    try:
        witness = FerrersWitness.from_entries(data["alpha"])
        bounds = BiDegree(*data["bounds"])
    except (KeyError, TypeError) as exc:
        raise TableFormatError(f"not a witness document: {exc}") from exc
    except HilbertError as exc:
        raise TableFormatError(str(exc)) from exc
    if bounds != witness.bounds:
        raise TableFormatError(f"declared bounds {bounds} do not match the alpha grid {witness.bounds}")
    return witness


def certificate_to_dict(certificate: FailureCertificate) -> Dict[str, Any]:
    result = {"cell": list(certificate.cell), "reason": certificate.reason}
    if certificate.cap is not None:
        result["cap"] = list(certificate.cap.entries)
    if certificate.dead_ends:
        result["dead_ends"] = [
            {
                "cap": list(dead.cap.entries),
                "row_parent": list(dead.row_parent.entries) if dead.row_parent else None,
                "col_parent": list(dead.col_parent.entries) if dead.col_parent else None,
            }
            for dead in certificate.dead_ends
        ]
    return result


def read_witness(path: Union[str, Path]) -> FerrersWitness:
    try:
        data = json.loads(read_source(path))
    except json.JSONDecodeError as exc:
        raise TableFormatError(exc.msg, exc.lineno, exc.colno) from exc
    return witness_from_dict(data)


def dumps(data: Dict[str, Any]) -> str:
    return json.dumps(data, indent=2, sort_keys=False)
