"""
Independent word-problem oracle for B_n.

Uses Artin's faithful action of B_n on the free group F_n = <x1..xn>:

    s_i:     x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i
    s_i^-1:  x_i -> x_{i+1},              x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}

Two braid words are equal iff they induce the same automorphism, i.e. send each
x_j to the same reduced word. Image lengths can grow exponentially in the word
length, so this is for cross-checking small cases only.
"""

from __future__ import annotations

from .core import ArtinWord

FreeWord = tuple[int, ...]  # letters +-j for x_j^{+-1}


def free_reduce(letters) -> FreeWord:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def free_inverse(w: FreeWord) -> FreeWord:
    return tuple(-x for x in reversed(w))


def _letter_images(n: int, index: int, sign: int) -> list[FreeWord]:
    images = [(j,) for j in range(1, n + 1)]
    i = index
    if sign > 0:
        images[i - 1] = (i, i + 1, -i)
        images[i] = (i,)
    else:
        images[i - 1] = (i + 1,)
        images[i] = (-(i + 1), i, i + 1)
    return images


def _substitute(w: FreeWord, images: list[FreeWord]) -> FreeWord:
    out: list[int] = []
    for x in w:
        out.extend(images[x - 1] if x > 0 else free_inverse(images[-x - 1]))
    return free_reduce(out)


def artin_action(w: ArtinWord) -> tuple[FreeWord, ...]:
    """Images of x1..xn under the automorphism induced by w."""
    n = w.strands
    images = [(j,) for j in range(1, n + 1)]
    for letter in w.letters:
        step = _letter_images(n, letter.index, letter.sign)
        images = [_substitute(step[j], images) for j in range(n)]
    return tuple(images)


def artin_equal(u: ArtinWord, v: ArtinWord) -> bool:
    if u.strands != v.strands:
        raise ValueError("words live in different braid groups")
    return artin_action(u) == artin_action(v)


def is_trivial(w: ArtinWord) -> bool:
    return all(img == (j,) for j, img in enumerate(artin_action(w), 1))
