from typing import List

from ..models import ConnectionMatrix


def _quoted(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(m: ConnectionMatrix) -> str:
    """Graphviz digraph with one node per concept and one edge per nonzero entry.

    Edges carrying an I part are dashed.
    """
    lines: List[str] = ["digraph G {"]
    nodes = list(m.row_space)
    if not m.is_square:
        nodes += [label for label in m.col_space if label not in m.row_space]
    lines += [f"{_quoted(node)};" for node in nodes]
    for source, target, value in m.edges():
        attributes = f'label="{value}"'
        if not value.is_real():
            attributes += ", style=dashed"
        lines.append(f"{_quoted(source)} -> {_quoted(target)} [{attributes}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
