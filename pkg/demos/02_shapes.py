"""
Standard shapes
===============

The representable presheaf of an object n: its p-cells are the words from
p to n, and faces act by composition. At arity 1 these are the augmented
simplices, at arity 2 the cubes.
"""

from nusets.shapes import geometric_inventory, standard_shape, to_dot

# the square: 4 vertices, 4 edges, 1 face
square = standard_shape(2, 2)
print("square carriers:", [c.size for c in square.carriers])
print("square edges:", list(square.carriers[1].labels))

# arity 1 carries an extra bottom level of colours, so the geometric
# inventory starts one carrier up: the triangle is the object-3 shape
triangle = standard_shape(1, 3)
print("triangle carriers:", [c.size for c in triangle.carriers])
print("triangle inventory (vertices, edges, faces):",
      geometric_inventory(triangle))

# inventories for the first few shapes in both arities
for nu in (1, 2):
    for n in range(4):
        print(f"nu={nu} object {n}:",
              geometric_inventory(standard_shape(nu, n)))

# DOT output for a quick picture
print()
print(to_dot(square))
