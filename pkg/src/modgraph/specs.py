"""Instance spec files: a strict JSON schema for (ring, module) pairs.

Specs normalize to sorted-key JSON, so equal content gives byte-equal files
and a stable content hash.  Unknown fields are rejected.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .caps import Caps
from .errors import SpecError
from .fields import gf_build
from .modules import (
    FiniteModule,
    custom_module,
    direct_sum,
    quotient,
    regular_module,
    submodule_generated,
)
from .rings import (
    FiniteRing,
    ring_from_field,
    ring_from_tables,
    ring_matrix,
    ring_poly_quot,
    ring_product,
    ring_triangular,
    ring_zmod,
)

SPEC_VERSION = 1

_RING_FIELDS = {
    "gf": {"kind", "p", "k"},
    "zmod": {"kind", "n"},
    "matrix": {"kind", "p", "k", "m"},
    "triangular": {"kind", "p", "k", "subfield_degree"},
    "product": {"kind", "left", "right"},
    "poly_quot": {"kind", "p", "relations", "variables"},
    "table": {"kind", "add", "mul"},
}
_MODULE_FIELDS = {
    "regular": {"kind"},
    "direct_sum": {"kind", "left", "right"},
    "quotient": {"kind", "of", "kernel_gens"},
    "custom": {"kind", "add", "act"},
}
_CAP_FIELDS = {"max_ring_size", "max_module_size", "max_submodules", "max_exact_vertices"}


def _check_fields(obj: dict, allowed: set[str], what: str) -> None:
    if not isinstance(obj, dict):
        raise SpecError(f"{what} must be an object")
    unknown = set(obj) - allowed
    if unknown:
        raise SpecError(f"unknown fields {sorted(unknown)} in {what}")


def _validate_ring(spec) -> None:
    if not isinstance(spec, dict) or "kind" not in spec:
        raise SpecError("ring spec needs a 'kind'")
    kind = spec["kind"]
    if kind not in _RING_FIELDS:
        raise SpecError(f"unknown ring kind {kind!r}")
    _check_fields(spec, _RING_FIELDS[kind], f"ring kind {kind}")
    if kind == "product":
        _validate_ring(spec["left"])
        _validate_ring(spec["right"])


def _validate_module(spec) -> None:
    if not isinstance(spec, dict) or "kind" not in spec:
        raise SpecError("module spec needs a 'kind'")
    kind = spec["kind"]
    if kind not in _MODULE_FIELDS:
        raise SpecError(f"unknown module kind {kind!r}")
    _check_fields(spec, _MODULE_FIELDS[kind], f"module kind {kind}")
    if kind == "direct_sum":
        _validate_module(spec["left"])
        _validate_module(spec["right"])
    if kind == "quotient":
        _validate_module(spec["of"])


def normalize_spec(spec: dict) -> dict:
    _check_fields(spec, {"version", "ring", "module", "caps"}, "instance spec")
    version = spec.get("version", SPEC_VERSION)
    if version != SPEC_VERSION:
        raise SpecError(f"unsupported spec version {version}")
    if "ring" not in spec or "module" not in spec:
        raise SpecError("instance spec needs 'ring' and 'module'")
    _validate_ring(spec["ring"])
    _validate_module(spec["module"])
    if "caps" in spec:
        _check_fields(spec["caps"], _CAP_FIELDS, "caps")
    out = {"version": SPEC_VERSION, "ring": spec["ring"], "module": spec["module"]}
    if spec.get("caps"):
        out["caps"] = spec["caps"]
    return json.loads(dumps_spec(out))


def dumps_spec(spec: dict) -> str:
    return json.dumps(spec, sort_keys=True, separators=(",", ":"))


def spec_hash(spec: dict) -> str:
    return hashlib.sha256(dumps_spec(spec).encode()).hexdigest()[:12]


def load_spec_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SpecError(f"cannot read spec file {path}: {exc}") from exc
    return normalize_spec(raw)


# -- construction -------------------------------------------------------------


def build_ring(spec: dict, caps: Caps) -> FiniteRing:
    kind = spec["kind"]
    if kind == "gf":
        return ring_from_field(gf_build(int(spec["p"]), int(spec["k"]), caps), caps)
    if kind == "zmod":
        return ring_zmod(int(spec["n"]), caps)
    if kind == "matrix":
        return ring_matrix(gf_build(int(spec["p"]), int(spec["k"]), caps), int(spec["m"]), caps)
    if kind == "triangular":
        return ring_triangular(
            gf_build(int(spec["p"]), int(spec["k"]), caps), int(spec["subfield_degree"]), caps
        )
    if kind == "product":
        return ring_product(build_ring(spec["left"], caps), build_ring(spec["right"], caps), caps)
    if kind == "poly_quot":
        return ring_poly_quot(
            int(spec["p"]), list(spec["relations"]), spec.get("variables"), caps
        )
    if kind == "table":
        return ring_from_tables(spec["add"], spec["mul"], caps=caps)
    raise SpecError(f"unknown ring kind {kind!r}")


def build_module(spec: dict, ring: FiniteRing, caps: Caps) -> FiniteModule:
    kind = spec["kind"]
    if kind == "regular":
        return regular_module(ring, caps)
    if kind == "direct_sum":
        return direct_sum(
            build_module(spec["left"], ring, caps), build_module(spec["right"], ring, caps), caps
        )
    if kind == "quotient":
        base = build_module(spec["of"], ring, caps)
        kernel = submodule_generated(base, [int(g) for g in spec["kernel_gens"]])
        q, _ = quotient(base, kernel, caps)
        return q
    if kind == "custom":
        return custom_module(ring, spec["add"], spec["act"], caps=caps)
    raise SpecError(f"unknown module kind {kind!r}")


def describe_ring_spec(spec: dict) -> str:
    kind = spec["kind"]
    if kind == "gf":
        return f"gf({spec['p']},{spec['k']})"
    if kind == "zmod":
        return f"zmod({spec['n']})"
    if kind == "matrix":
        return f"M{spec['m']}(F{int(spec['p']) ** int(spec['k'])})"
    if kind == "triangular":
        q = int(spec["p"]) ** int(spec["k"])
        w = int(spec["p"]) ** int(spec["subfield_degree"])
        return f"triangular(F{q},F{w})"
    if kind == "product":
        return f"product({describe_ring_spec(spec['left'])},{describe_ring_spec(spec['right'])})"
    if kind == "poly_quot":
        return f"polyquot(F{spec['p']},{','.join(spec['relations'])})"
    if kind == "table":
        return f"table#{spec_hash(spec)}"
    raise SpecError(f"unknown ring kind {kind!r}")


def describe_module_spec(spec: dict) -> str:
    kind = spec["kind"]
    if kind == "regular":
        return "regular"
    if kind == "direct_sum":
        return f"sum({describe_module_spec(spec['left'])},{describe_module_spec(spec['right'])})"
    if kind == "quotient":
        gens = ",".join(str(g) for g in spec["kernel_gens"])
        return f"quot({describe_module_spec(spec['of'])};{gens})"
    if kind == "custom":
        return f"custom#{spec_hash(spec)}"
    raise SpecError(f"unknown module kind {kind!r}")


def instance_name(spec: dict) -> str:
    ring = describe_ring_spec(spec["ring"])
    module = spec["module"]
    if (
        module["kind"] == "direct_sum"
        and module["left"] == {"kind": "regular"}
        and module["right"] == {"kind": "regular"}
    ):
        return f"{ring}^2/selfsum"
    return f"{ring}/{describe_module_spec(module)}"


@dataclass
class Instance:
    instance_id: str
    spec: dict
    ring: FiniteRing
    module: FiniteModule

    @property
    def content_hash(self) -> str:
        return spec_hash(self.spec)


def build_instance(spec: dict, caps: Caps | None = None) -> Instance:
    spec = normalize_spec(spec)
    caps = (caps or Caps()).override(**spec.get("caps", {}))
    ring = build_ring(spec["ring"], caps)
    module = build_module(spec["module"], ring, caps)
    return Instance(instance_name(spec), spec, ring, module)


def make_spec(ring: dict, module: dict, caps: dict | None = None) -> dict:
    spec = {"version": SPEC_VERSION, "ring": ring, "module": module}
    if caps:
        spec["caps"] = caps
    return normalize_spec(spec)
