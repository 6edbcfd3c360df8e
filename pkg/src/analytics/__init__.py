"""Barridos del corpus de escritorio y tablas de resultados con pandas."""
