"""A short tour of the core operations.

Run as: python demos/tour.py
"""

from shufflecraft import (
    find_conducting,
    find_self_shuffle_betas,
    find_square,
    is_square_free,
    shuffle_conducted,
    unshuffle_square_free,
)

# A square is a doubled factor. 010212 avoids them, 012012 is one.
print("is_square_free('010212') =", is_square_free("010212"))
print("find_square('012012')    =", find_square("012012"))

# A conducting sequence steers an interleaving: 0 pulls from the first
# operand, 1 from the second.
word = shuffle_conducted("0102", "1201", "00101110")
print("shuffle 0102 and 1201 under 00101110 ->", word)

# The inverse direction: which conducting sequence produces that word?
beta = find_conducting("0102", "1201", word)
print("recovered conducting sequence:", beta)

# Shuffling a word with itself can stay square-free.  012 does, in exactly
# two ways (the second is the bitwise complement of the first).
for beta, shuffled in find_self_shuffle_betas("012"):
    print(f"012 shuffled with itself under {beta} -> {shuffled}")

# And back again: factor a word as a self-shuffle of something square-free.
print("unshuffle 010212 ->", unshuffle_square_free("010212"))
