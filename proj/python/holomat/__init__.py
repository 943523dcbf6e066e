"""Extraction, orthogonality testing and classification of holomorphic
functions between matrix algebras."""

try:
    from ._holomat import *  # noqa: F401,F403
    from ._holomat import __doc__ as _core_doc
except ImportError:
    # Development layout: the extension is built by CMake and put on the
    # path directly rather than packaged next to this file.
    from _holomat import *  # noqa: F401,F403
    from _holomat import __doc__ as _core_doc

__doc__ = _core_doc or __doc__
__version__ = "0.1.0"
