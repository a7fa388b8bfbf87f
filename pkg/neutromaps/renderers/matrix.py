from ..algebra import format_token
from ..models import ConnectionMatrix, MapKind


def serialize_matrix(m: ConnectionMatrix) -> str:
    """Canonical matrix-file text; parsing it back gives an equal matrix."""
    lines = [f"kind: {m.kind.value}", "rows: " + " ".join(m.row_space)]
    if m.kind is not MapKind.COGNITIVE:
        lines.append("cols: " + " ".join(m.col_space))
    if m.kind is MapKind.BAM and m.scale is not None:
        lines.append(f"scale: {m.scale}")
    lines += [" ".join(format_token(v) for v in row) for row in m.grid()]
    return "\n".join(lines) + "\n"
