"""Face census of a projective line arrangement, walked on the sphere.

A projective line with coefficient vector l lifts to the great circle
{v : l.v = 0}.  For a simple arrangement (no two lines equal, no three
concurrent) every spherical vertex is a transversal crossing of exactly
two circles, so a face walk needs no angular sorting at vertices: arriving
along one circle, the boundary of the face on a fixed side always turns
onto the other circle, and the turn direction is a single determinant
sign.  Faces of the projective arrangement are spherical faces / 2.

All arithmetic is integer: sphere points are kept as primitive integer
vectors (gcd 1, sign preserved - a ray and its antipode are distinct).
"""

from __future__ import annotations

from itertools import combinations
from math import gcd

from .errors import DegenerateInput, NotSimple
from .geometry import _cross, _det3, _dot


def _ray(v):
    g = gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]))
    return (v[0] // g, v[1] // g, v[2] // g)


def _tangent_toward(v, w):
    """Integer tangent vector at v pointing along the minor arc toward w."""
    vv = _dot(v, v)
    vw = _dot(v, w)
    return (vv * w[0] - vw * v[0], vv * w[1] - vw * v[1], vv * w[2] - vw * v[2])


def _sort_on_circle(normal, rays):
    """Cyclic order of sphere points on the great circle with this normal."""
    q1 = rays[0]
    q2 = _cross(normal, q1)
    keyed = []
    for v in rays:
        s, t = _dot(v, q1), _dot(v, q2)
        # half-plane first (angle in [0,pi) before [pi,2pi)), then by cross
        keyed.append(((0 if (t > 0 or (t == 0 and s > 0)) else 1), s, t, v))

    import functools

    def cmp(a, b):
        if a[0] != b[0]:
            return -1 if a[0] < b[0] else 1
        cr = a[1] * b[2] - a[2] * b[1]
        if cr == 0:
            raise NotSimple("coincident vertices on a circle")
        return -1 if cr > 0 else 1

    keyed.sort(key=functools.cmp_to_key(cmp))
    return [k[3] for k in keyed]


def face_census(normals) -> dict:
    """Map face size -> list of spherical faces (vertex rays in boundary
    order) for the great-circle arrangement of the lines.

    normals: integer coefficient triples of the lines, pairwise independent,
    no three concurrent (else NotSimple).  Faces come in antipodal pairs;
    projective counts are half the spherical ones.
    """
    n = len(normals)
    if n < 3:
        raise DegenerateInput("need at least three lines for a face census")
    normals = [tuple(v) for v in normals]

    vertex_circles = {}  # ray -> (i, j)
    on_circle = [[] for _ in range(n)]
    for i, j in combinations(range(n), 2):
        x = _cross(normals[i], normals[j])
        if x == (0, 0, 0):
            raise DegenerateInput("two lines coincide")
        for v in (x, (-x[0], -x[1], -x[2])):
            r = _ray(v)
            if r in vertex_circles:
                raise NotSimple("three lines concurrent")
            vertex_circles[r] = (i, j)
            on_circle[i].append(r)
            on_circle[j].append(r)

    nxt = {}
    prv = {}
    for i in range(n):
        cyc = _sort_on_circle(normals[i], on_circle[i])
        m = len(cyc)
        for a in range(m):
            v, w = cyc[a], cyc[(a + 1) % m]
            nxt[(v, i)] = w
            prv[(w, i)] = v

    # Directed edges (u, v, circle); walk each face once.
    unvisited = set()
    for (v, i), w in nxt.items():
        unvisited.add((v, w, i))
        unvisited.add((w, v, i))

    sphere_faces = {}
    edge_total = len(unvisited)
    walked = 0
    while unvisited:
        start = next(iter(unvisited))
        edge = start
        boundary = []
        while True:
            unvisited.discard(edge)
            walked += 1
            u, v, i = edge
            boundary.append(v)
            ci, cj = vertex_circles[v]
            j = cj if ci == i else ci
            motion = _tangent_toward(v, u)
            motion = (-motion[0], -motion[1], -motion[2])
            w1 = nxt[(v, j)]
            if _det3(motion, _tangent_toward(v, w1), v) > 0:
                edge = (v, w1, j)
            else:
                edge = (v, prv[(v, j)], j)
            if edge == start:
                break
        sphere_faces.setdefault(len(boundary), []).append(boundary)

    v_count = len(vertex_circles)
    f_count = sum(len(v) for v in sphere_faces.values())
    assert walked == edge_total
    assert v_count - edge_total // 2 + f_count == 2, "sphere Euler check failed"
    for faces in sphere_faces.values():
        assert len(faces) % 2 == 0, "faces must come in antipodal pairs"
    return sphere_faces


def face_size_counts(normals) -> dict:
    """Projective face-size census: size -> count (spherical counts halved)."""
    return {k: len(v) // 2 for k, v in face_census(normals).items()}
