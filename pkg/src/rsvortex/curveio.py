"""Curve geometry writers: CSV rows and ASCII PLY with line elements."""

__all__ = ["write_curves_csv", "write_curves_ply"]


def write_curves_csv(path, curveset):
    """curve_id,x,y,z rows; closed curves repeat their first point at the end.

    The repetition lets plotting tools draw closed loops directly from the
    row stream.
    """
    with open(path, "w") as fh:
        fh.write("curve_id,x,y,z\n")
        for curve in curveset.curves:
            pts = curve.points
            if curve.closed and len(pts):
                rows = list(pts) + [pts[0]]
            else:
                rows = list(pts)
            for p in rows:
                fh.write(f"{curve.id},{p[0]:.17g},{p[1]:.17g},{p[2]:.17g}\n")


def write_curves_ply(path, curveset):
    """ASCII PLY with vertex and edge elements (one edge per polyline segment)."""
    vertices = []
    edges = []
    for curve in curveset.curves:
        base = len(vertices)
        vertices.extend(curve.points)
        n = len(curve.points)
        edges.extend((base + i, base + i + 1) for i in range(n - 1))
        if curve.closed and n > 2:
            edges.append((base + n - 1, base))
    with open(path, "w") as fh:
        fh.write("ply\nformat ascii 1.0\n")
        fh.write(f"element vertex {len(vertices)}\n")
        fh.write("property float x\nproperty float y\nproperty float z\n")
        fh.write(f"element edge {len(edges)}\n")
        fh.write("property int vertex1\nproperty int vertex2\n")
        fh.write("end_header\n")
        for p in vertices:
            fh.write(f"{p[0]:.9g} {p[1]:.9g} {p[2]:.9g}\n")
        for a, b in edges:
            fh.write(f"{a} {b}\n")
