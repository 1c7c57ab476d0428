"""plotkit: figures from safelift run artifacts, via the file contract only."""

from plotkit.figures import FIGURE_KINDS, PlotSpec, build_figure, render
from plotkit.schema import SchemaMismatch

__version__ = "0.1.0"
