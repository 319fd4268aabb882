"""Nearest points on polytopes, flats, and subspaces.

Every set representation in this package supports the same projection
interface, and every answer comes with a checkable certificate: the
variational inequality says px is THE nearest point iff the vector from
px to x makes an obtuse angle with every direction into the set.
"""

import numpy as np

from hyperconvex import (
    Flat,
    Polytope,
    Subspace,
    contains,
    metric_projection,
    nearest_point,
    project_hyperplane,
    truncated_distance,
)


def show(label, point, dist):
    print(f"  {label}: nearest point {np.round(point, 6)}, distance {dist:.6f}")


print("Projecting x = (0, 0) onto the triangle conv{(1,1), (2,1), (1,2)}")
triangle = Polytope(np.array([[1.0, 1.0], [2.0, 1.0], [1.0, 2.0]]))
px, dist = metric_projection(triangle, np.zeros(2))
show("triangle", px, dist)
print(f"  variational residual: {np.max((triangle.points - px) @ (np.zeros(2) - px)):.2e}")
print()

print("The same interface covers affine and linear sets:")
line = Flat(np.array([0.0, 1.0]), np.array([[1.0, 0.0]]))
show("horizontal line y=1 from (5,7)", *metric_projection(line, np.array([5.0, 7.0])))
diag = Subspace(np.array([[2.0**-0.5, 2.0**-0.5]]))
show("diagonal from (2,0)", *metric_projection(diag, np.array([2.0, 0.0])))
print()

print("nearest_point is projection of the origin; its norm measures how")
print("far a set sits from 0:")
for label, s in [("triangle", triangle), ("line y=1", line), ("diagonal", diag)]:
    p, nu = nearest_point(s)
    print(f"  {label}: p = {np.round(p, 6)}, norm {nu:.6f}")
print()

print("Hyperplane reflections come in closed form. The hyperplane through")
print("a = (0,1) orthogonal to a is the line y = 1:")
print(f"  (2,3) projects to {project_hyperplane(np.array([0.0, 1.0]), np.array([2.0, 3.0]))}")
print()

print("Distances to a set cut by a ball need no new machinery when the ball")
print("is generous: cutting conv{(0,0),(10,0)} at radius 4 moves the nearest")
print("point for x = (11, 0) from (10,0) to (4,0):")
segment = Polytope(np.array([[0.0, 0.0], [10.0, 0.0]]))
print(f"  plain distance  : {metric_projection(segment, np.array([11.0, 0.0]))[1]:.6f}")
print(f"  cut at radius 4 : {truncated_distance(segment, np.array([11.0, 0.0]), 4.0):.6f}")
print()

print("Membership is a projection with a zero-distance certificate:")
print(f"  (0.5, 0.5) in the unit triangle: {contains(Polytope(np.array([[0,0],[2,0],[0,2]], dtype=float)), np.array([0.5, 0.5]), 1e-9)}")
