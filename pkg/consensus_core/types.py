from typing import Tuple

#: An alternative, canonicalized to an index in ``0..K-1``.
Alternative = int
#: Alternatives from most to least preferred.
Ranking = Tuple[int, ...]
