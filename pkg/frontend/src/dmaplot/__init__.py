from .render import FigureSpec, SweepRow, parse_csv, render

__version__ = "0.1.0"
