"""Stated skein algebras of punctured surfaces: presentations, PBW normal forms and gauge coinvariants."""
