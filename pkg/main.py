import logging
import sys

from superpop.cli import main

if __name__ == "__main__":
    try:
        sys.exit(main())
    except Exception as e:
        logging.getLogger("superpop").critical("Unhandled exception: %s", e, exc_info=True)
        sys.exit(1)
