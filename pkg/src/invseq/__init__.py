"""Pattern avoidance in inversion sequences under triples of relations."""

__version__ = "0.1.0"
