"""
Entry point: `python main.py classify --m 3`
"""
from cli import cli


if __name__ == "__main__":
    cli()
