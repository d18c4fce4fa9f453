import os
import sys
import logging

# USE THIS TO LOG TO A FILE
# logging.basicConfig(
# 	level=logging.DEBUG,
# 	filename='factorlab.txt',
# 	format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
# )

LOG_LEVEL = logging.getLevelName(os.environ.get('FACTORLAB_LOG_LEVEL', 'INFO').upper())
if not isinstance(LOG_LEVEL, int):
    LOG_LEVEL = logging.INFO

LOGGER = logging.getLogger('factorlab')
LOGGER.setLevel(LOG_LEVEL)

console_handler = logging.StreamHandler(sys.stderr)
console_handler.setLevel(LOG_LEVEL)

formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
console_handler.setFormatter(formatter)

LOGGER.addHandler(console_handler)


def set_log_level(level: int):
    LOGGER.setLevel(level)
    console_handler.setLevel(level)
