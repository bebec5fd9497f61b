"""Row-level data behind the CLI tables and Hasse diagrams."""
from __future__ import annotations

import dataclasses

from .coxeter import StandardCoxeterElement
from .fc import fc_str, ij_sets, phi
from .nc import NoncrossingPartition, SequencePair, involution, psi1, psi2
from .stdform import cover_relations, linear_extension, standard_form, vertical_vector


@dataclasses.dataclass(frozen=True)
class TableRow:
    x: NoncrossingPartition
    inv: NoncrossingPartition
    psi1: SequencePair
    psi2: SequencePair
    J: tuple[int, ...]
    I: tuple[int, ...]
    phi_normal_form: str
    phi_cycles: str

    def as_text(self) -> list[str]:
        fmt = lambda s: "{" + ",".join(map(str, s)) + "}" if s else "∅"
        return [
            str(self.x),
            str(self.inv),
            str(self.psi1),
            str(self.psi2),
            f"({fmt(self.J)},{fmt(self.I)})",
            self.phi_normal_form,
            self.phi_cycles,
        ]

    def to_json(self) -> dict:
        return {
            "x": [list(cy) for cy in self.x.perm.cycles()],
            "inv": [list(cy) for cy in self.inv.perm.cycles()],
            "psi1": self.psi1.to_json(),
            "psi2": self.psi2.to_json(),
            "J": list(self.J),
            "I": list(self.I),
            "phi": phi(self.x).to_json()["runs"],
            "phi_normal_form": self.phi_normal_form,
            "phi_cycles": [list(cy) for cy in phi(self.x).perm.cycles()],
        }


TABLE_HEADER = ["x", "inv_c(x)", "psi1(x)", "psi2(x)", "(J,I)", "phi(x) normal form", "phi(x) cycles"]


def bijection_table(c: StandardCoxeterElement) -> list[TableRow]:
    rows = []
    for x in linear_extension(c):
        w = phi(x)
        I, J = ij_sets(w)
        rows.append(
            TableRow(
                x=x,
                inv=involution(x),
                psi1=psi1(x),
                psi2=psi2(x),
                J=tuple(sorted(J)),
                I=tuple(sorted(I)),
                phi_normal_form=fc_str(w),
                phi_cycles=str(w.perm),
            )
        )
    return rows


def standard_form_rows(c: StandardCoxeterElement) -> list[tuple[NoncrossingPartition, str, tuple[int, ...]]]:
    return [(x, str(standard_form(x)), vertical_vector(x)) for x in linear_extension(c)]


def hasse_dot(c: StandardCoxeterElement) -> str:
    elems = linear_extension(c)
    ids = {x: k for k, x in enumerate(elems)}
    lines = [f'digraph "V{c.n}" {{', "  rankdir=BT;"]
    for x in elems:
        vec = ",".join(map(str, vertical_vector(x)))
        lines.append(f'  n{ids[x]} [label="({vec})\\n{x}"];')
    for a, b in cover_relations(c):
        lines.append(f"  n{ids[a]} -> n{ids[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_json(c: StandardCoxeterElement) -> dict:
    elems = linear_extension(c)
    return {
        "n": c.n,
        "c": list(c.cycle_seq),
        "nodes": [
            {"cycles": [list(cy) for cy in x.perm.cycles()], "vector": list(vertical_vector(x))} for x in elems
        ],
        "edges": [[list(vertical_vector(a)), list(vertical_vector(b))] for a, b in cover_relations(c)],
    }


__all__ = ["TABLE_HEADER", "TableRow", "bijection_table", "hasse_dot", "hasse_json", "standard_form_rows"]
