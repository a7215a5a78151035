#!/usr/bin/env python
"""Entry point for the crossflip toolkit.

Every workflow is a management command of the ``topology`` app, e.g.::

    python manage.py gen cross-polytope -d 2
    python manage.py catalog -d 2 --mode general
    python manage.py test topology
"""
import os
import sys


def main():
    """Dispatch to the requested topology command."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'crossflip.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Install the packages listed in "
            "requirements.txt into the active environment."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
