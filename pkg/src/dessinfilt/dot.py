"""Graphviz rendering of a dessin as a bipartite multigraph."""
from __future__ import annotations

from .dessin import Dessin
from .permutation import perm_cycles


def export_dot(D: Dessin, name: str = "dessin") -> str:
    """
    DOT text with black vertices ``b0, b1, ...`` (cycles of sigma0), white
    vertices ``w0, w1, ...`` (cycles of sigma1) and one edge per dessin edge.

    Renderers ignore the embedding, so the cyclic order at each vertex is
    written as a comment.

        >>> print(export_dot(Dessin((0,), (0,))))
        graph dessin {
          // b0: cyclic order (0)
          b0 [shape=circle, style=filled, fillcolor=black, fontcolor=white];
          // w0: cyclic order (0)
          w0 [shape=circle, style=filled, fillcolor=white];
          b0 -- w0 [label="0"];
        }
    """
    black = perm_cycles(D.sigma0)
    white = perm_cycles(D.sigma1)
    b_of = {e: i for i, c in enumerate(black) for e in c}
    w_of = {e: i for i, c in enumerate(white) for e in c}
    lines = [f"graph {name} {{"]
    for i, c in enumerate(black):
        lines.append(f"  // b{i}: cyclic order ({' '.join(map(str, c))})")
        lines.append(f"  b{i} [shape=circle, style=filled, fillcolor=black, fontcolor=white];")
    for i, c in enumerate(white):
        lines.append(f"  // w{i}: cyclic order ({' '.join(map(str, c))})")
        lines.append(f"  w{i} [shape=circle, style=filled, fillcolor=white];")
    for e in range(D.edges):
        lines.append(f'  b{b_of[e]} -- w{w_of[e]} [label="{e}"];')
    lines.append("}")
    return "\n".join(lines)
