"""Symbol combinatorics for unipotent correspondences.

Core modules:

* ``gf2``        - identify/kill presentations of GF(2) spaces
* ``partitions`` - partitions, bipartitions, memoized counting
* ``symbols``    - two-row symbols, shift classes, similarity structure
* ``unipotent``  - marked partitions, c-sequences, their GF(2) spaces
* ``springer``   - the four explicit case correspondences
* ``spin``       - the closed-form spin correspondence
* ``counting``   - census identities and the cuspidal predicate

``cli`` is the command-line front end and ``service`` the FastAPI wrapper.
"""

__version__ = "0.1.0"
