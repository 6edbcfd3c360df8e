"""Punto de entrada de la línea de comandos del motor de Kempe.

Ejemplo: ``python scripts/kempe.py transform --graph g.txt --from b.txt --target a.txt --out traza.jsonl``.
"""

from pathlib import Path
import sys

# Se agrega el directorio raíz del repositorio al sys.path para resolver el paquete `src`.
sys.path.append(str(Path(__file__).resolve().parents[1]))

from src.cli import main

if __name__ == "__main__":
    main()
