from .main import main, run
from .records import JobSpec, parse_job, parse_shape, shape_record
from .svg import emit_svg

__all__ = ["main", "run", "JobSpec", "parse_job", "parse_shape", "shape_record", "emit_svg"]
