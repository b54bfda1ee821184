"""
MatchSite: where a rule pattern sits inside a concrete diagram.
"""
from __future__ import annotations

import json
from typing import Any, NamedTuple, Tuple


def _freeze(value: Any) -> Any:
    if isinstance(value, list):
        return tuple(_freeze(v) for v in value)
    return value


class MatchSite(NamedTuple):
    """
    A binding of a rule side to a concrete subdiagram.

    Attributes:
        vertices (Tuple[int, ...]): Matched vertex ids.
        edges (Tuple[int, ...]): Edges internal to the match.
        legs (Tuple[Tuple[int, int], ...]): Boundary legs (edge id, far index), in the order of
            the pattern's boundary (inputs then outputs). The leg leads toward `edges[e][k]`.
        loops (int): Free loops consumed by the pattern.
        params (Tuple): Rule parameters (phases as quarter turns, leg counts, variants).
    """

    vertices: Tuple[int, ...] = ()
    edges: Tuple[int, ...] = ()
    legs: Tuple[Tuple[int, int], ...] = ()
    loops: int = 0
    params: Tuple = ()

    def to_text(self) -> str:
        """
        Renders the binding as `v=..;e=..;l=e:k,..;o=..;p=<json>` without spaces.
        """
        v = ",".join(str(x) for x in self.vertices)
        e = ",".join(str(x) for x in self.edges)
        legs = ",".join(f"{edge}:{k}" for edge, k in self.legs)
        params = json.dumps(list(self.params), separators=(",", ":"), ensure_ascii=True)
        return f"v={v};e={e};l={legs};o={self.loops};p={params}"

    @classmethod
    def parse(cls, text: str) -> MatchSite:
        """
        Parses the output of `to_text`.

        Raises:
            ValueError: On malformed bindings.
        """
        fields = {}
        head, sep, params = text.partition(";p=")
        if not sep:
            raise ValueError(f"Binding {text!r} has no parameter field")
        for part in head.split(";"):
            key, eq, value = part.partition("=")
            if not eq or key not in ("v", "e", "l", "o"):
                raise ValueError(f"Bad binding field {part!r}")
            fields[key] = value
        try:
            vertices = tuple(int(x) for x in fields.get("v", "").split(",") if x)
            edges = tuple(int(x) for x in fields.get("e", "").split(",") if x)
            legs = tuple(
                (int(a), int(b))
                for a, b in (leg.split(":") for leg in fields.get("l", "").split(",") if leg)
            )
            loops = int(fields.get("o", "0") or 0)
            parsed = json.loads(params)
        except (ValueError, json.JSONDecodeError) as err:
            raise ValueError(f"Bad binding {text!r}: {err}") from err
        return cls(vertices, edges, legs, loops, _freeze(parsed))
