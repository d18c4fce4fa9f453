EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_TIMEOUT = 3

COMMENT_MARKER = '#'
SUMMARY_KEY = 'summary'
