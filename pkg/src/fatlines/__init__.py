"""Powers versus symbolic powers for ACM points in P^1 x P^1."""

__version__ = "0.1.0"
