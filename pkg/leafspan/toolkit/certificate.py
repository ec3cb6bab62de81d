from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Union

import yaml

from leafspan.cost import as_rational
from leafspan.exceptions import GraphFormatError
from leafspan.solver import Certificate

PathLike = Union[str, Path]


def to_dict(cert: Certificate) -> Dict[str, Any]:
    return {
        "graph": {"v": cert.v, "e": cert.e, "s": cert.s, "t": cert.t},
        "bound": as_rational(cert.bound),
        "min_leaves": cert.min_leaves,
        "leaves": cert.leaves,
        "verified": cert.verified,
        "tree": [list(e) for e in cert.tree],
        "trace": cert.trace,
    }


def from_dict(data: Dict[str, Any]) -> Certificate:
    """
    Raises
    ------
    GraphFormatError
        A key is missing or has the wrong shape
    """
    try:
        graph = data["graph"]
        bound = Fraction(data["bound"]["num"], data["bound"]["den"])
        return Certificate(
            v=int(graph["v"]),
            e=int(graph["e"]),
            s=int(graph["s"]),
            t=int(graph["t"]),
            bound=bound,
            min_leaves=int(data["min_leaves"]),
            leaves=int(data["leaves"]),
            tree=[(int(u), int(v)) for u, v in data["tree"]],
            trace=list(data.get("trace") or []),
            verified=bool(data.get("verified", False)),
        )
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise GraphFormatError(f"malformed certificate: {exc!r}") from exc


def dumps(cert: Certificate) -> str:
    return yaml.safe_dump(to_dict(cert), sort_keys=False, default_flow_style=None)


def loads(text: str) -> Certificate:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise GraphFormatError(f"certificate is not valid YAML: {exc}") from exc
    if not isinstance(data, dict):
        raise GraphFormatError("certificate must be a mapping")
    return from_dict(data)


def write_certificate(cert: Certificate, path: PathLike) -> None:
    Path(path).write_text(dumps(cert), encoding="utf-8")


def read_certificate(path: PathLike) -> Certificate:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from exc
    return loads(text)
