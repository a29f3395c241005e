"""
The word category
=================

Arrows from p to n are length-n words with p stars; the remaining
positions carry directions. Composition substitutes the letters of the
inner word for the stars of the outer one, left to right.
"""

from nusets.words import (
    compose, face_word, factorizations, hom_count, hom_enumerate, identity,
    parse_word,
)

# parse a word: arity 2 uses L and R for the two directions
w = parse_word(2, "*LR*")
print("word:", w, "this word has", w.stars, "stars and length", len(w.letters))

# composition: stars consume the inner word's letters in order
g = parse_word(2, "*LR*")   # Hom(2, 4)
f = parse_word(2, "R*")     # Hom(1, 2), fills the two stars of g
print("compose:", g, "after", f, "=", compose(g, f))

# identities are all-star words
assert compose(g, identity(2, 2)) == g
assert compose(identity(2, 4), g) == g

# hom sets are finite; counts follow the closed form C(n,p) * nu^(n-p)
for p in range(3):
    words = hom_enumerate(2, p, 2)
    print(f"Hom({p}, 2) at arity 2:", [str(x) for x in words])
    assert len(words) == hom_count(2, p, 2)

# the q-th face in direction eps keeps everything but position q
print("face words of a square:",
      [str(face_word(2, eps, q, 2)) for q in range(2) for eps in range(2)])

# every word factors through one-step faces
w = parse_word(1, "*00")
print("factorizations of", w, ":",
      [(str(a), str(b)) for a, b in factorizations(w)])
