"""
PipeDegen – Renderizado de pipe dreams
=======================================
Diagramas deterministas de las n tuberías de un subconjunto M ⊆ P.

    ascii: triángulo de P fila por fila ('o' = elemento de M, '\\' = diagonal,
           '+' = cruce) seguido del recorrido de cada tubería y su salida.
    dot:   grafo pydotplus con un nodo por elemento visitado, una arista
           por paso de cada tubería y un nodo de salida etiquetado w_M(i).
"""

from __future__ import annotations

from typing import Iterable

import pydotplus

from pipedegen.domain.exceptions.domain_errors import InvalidInputError
from pipedegen.domain.services.pipe_dreams import trace_pipe, w_of_subset
from pipedegen.domain.value_objects.pipe_path import PipePath
from pipedegen.domain.value_objects.poset_element import validate_elements

FORMATS = ("ascii", "dot")
_PALETTE = ("red", "blue", "darkgreen", "orange", "purple", "brown", "cyan", "magenta")


def _node_name(i: int, j: int) -> str:
    return f"p_{i}_{j}"


def pipe_paths(M: Iterable[tuple[int, int]], n: int) -> tuple[PipePath, ...]:
    chosen = validate_elements(M, n)
    return tuple(trace_pipe(chosen, n, row) for row in range(1, n + 1))


def render_ascii(M: Iterable[tuple[int, int]], n: int) -> str:
    chosen = validate_elements(M, n)
    w = w_of_subset(chosen, n)
    lines = [f"w_M = {w}", ""]
    for i in range(1, n + 1):
        cells = []
        for j in range(1, n + 1):
            if j < i:
                cells.append(" ")
            elif (i, j) in chosen:
                cells.append("o")
            elif i == j:
                cells.append("\\")
            else:
                cells.append("+")
        lines.append(f"{i:>2} | " + " ".join(cells))
    lines.append("")
    for path in pipe_paths(chosen, n):
        route = " -> ".join(p.label() for p in path.elements)
        lines.append(f"tubería {path.entry_row}: {route}  => {path.exit_value}")
    return "\n".join(lines) + "\n"


def render_dot(M: Iterable[tuple[int, int]], n: int) -> str:
    chosen = validate_elements(M, n)
    graph = pydotplus.Dot(graph_type="digraph", rankdir="RL")
    declared: set[str] = set()
    for path in pipe_paths(chosen, n):
        for p in path.elements:
            name = _node_name(p.i, p.j)
            if name not in declared:
                shape = "box" if p in chosen else "ellipse"
                graph.add_node(pydotplus.Node(name, label=f'"{p.label()}"', shape=shape))
                declared.add(name)
        color = _PALETTE[(path.entry_row - 1) % len(_PALETTE)]
        for a, b in zip(path.elements, path.elements[1:]):
            graph.add_edge(pydotplus.Edge(_node_name(a.i, a.j), _node_name(b.i, b.j), color=color))
        exit_name = f"exit_{path.entry_row}"
        graph.add_node(pydotplus.Node(exit_name, label=f'"{path.exit_value}"', shape="plaintext"))
        last = path.elements[-1]
        graph.add_edge(pydotplus.Edge(_node_name(last.i, last.j), exit_name, color=color))
    return graph.to_string()


def render_pipedream(M: Iterable[tuple[int, int]], n: int, fmt: str = "ascii") -> str:
    if fmt not in FORMATS:
        raise InvalidInputError(f"formato desconocido {fmt!r}", field="format", value=fmt)
    return render_ascii(M, n) if fmt == "ascii" else render_dot(M, n)
