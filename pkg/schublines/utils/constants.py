"""
Constants for the schublines library.

This module defines various constants used in the schublines library.

Attributes:
    VERIFY_WORKER_PREFIX (str): Prefix for the verify worker configuration.
    HPC_PREFIX (str): Prefix for the multi-process pipeline settings.
    SPECTRAL_PREFIX (str): Prefix for the spectral integral configuration.

    KEY_SEP (str): Separator for keys in composite keys.
    ATTRIBUTE_SEP (str): Separator for attributes in composite keys.

    HEADER_KEY (str): Key for header data.
    BODY_KEY (str): Key for body data.

    REQUEST_TYPE_KEY (str): Composite key for request type.
    TASK_ID_KEY (str): Composite key for the task identifier.
    N_ITEMS_KEY (str): Composite key for number of items.
    PROBLEM_KEY (str): Composite key for the condition list of a problem.
    AMBIENT_N_KEY (str): Composite key for the ambient dimension n.
    CERTIFIED_KEY (str): Composite key for the certification flag.
    KOSTKA_KEY (str): Composite key for the decimal Kostka number.
    ERROR_KEY (str): Composite key for a failure diagnostic.

    END_OF_TASK_VALUE (str): Value indicating the end of a task.
    END_OF_PROCESS_VALUE (str): Value indicating the end of a process.
    EXPECTED_N_ITEMS_VALUE (str): Value indicating the expected number of items.
    VERIFY_REQUEST_VALUE (str): Value for verify request.
    VERIFY_RESPONSE_VALUE (str): Value for verify response.

    LAUNCH_SLEEP_TIME (float): Default sleep time for socket launch.

    CERTIFICATE_SCHEMA_VERSION (int): Version of the certificate JSON schema.
    CACHE_DIR_ENV (str): Environment variable naming the count cache
        directory.
    CACHE_FILE_NAME (str): File name of the count cache.
    DEFAULT_TABLEAU_CAP (int): Default cap on enumerated tableaux.
"""

VERIFY_WORKER_PREFIX = "vw"
HPC_PREFIX = "hpc"
SPECTRAL_PREFIX = "spi"

KEY_SEP = "/"
ATTRIBUTE_SEP = "_"

HEADER_KEY = "header"
BODY_KEY = "body"

_REQUEST_TYPE_KEY = "request_type"
_TASK_ID_KEY = "task_id"
_N_ITEMS_KEY = "n_items"
_PROBLEM_KEY = "problem"
_AMBIENT_N_KEY = "n"
_CERTIFIED_KEY = "certified"
_KOSTKA_KEY = "kostka"
_ERROR_KEY = "error"

REQUEST_TYPE_KEY = KEY_SEP.join([HEADER_KEY, _REQUEST_TYPE_KEY])
TASK_ID_KEY = KEY_SEP.join([HEADER_KEY, _TASK_ID_KEY])
N_ITEMS_KEY = KEY_SEP.join([BODY_KEY, _N_ITEMS_KEY])
PROBLEM_KEY = KEY_SEP.join([BODY_KEY, _PROBLEM_KEY])
AMBIENT_N_KEY = KEY_SEP.join([BODY_KEY, _AMBIENT_N_KEY])
CERTIFIED_KEY = KEY_SEP.join([BODY_KEY, _CERTIFIED_KEY])
KOSTKA_KEY = KEY_SEP.join([BODY_KEY, _KOSTKA_KEY])
ERROR_KEY = KEY_SEP.join([BODY_KEY, _ERROR_KEY])

END_OF_TASK_VALUE = "EndOfTask"
END_OF_PROCESS_VALUE = "EndOfProcess"
EXPECTED_N_ITEMS_VALUE = "ExpectedNItems"
VERIFY_REQUEST_VALUE = "VerifyRequest"
VERIFY_RESPONSE_VALUE = "VerifyResponse"

LAUNCH_SLEEP_TIME = 0.5

CERTIFICATE_SCHEMA_VERSION = 1
CACHE_DIR_ENV = "SCHUBLINES_CACHE_DIR"
CACHE_FILE_NAME = "kostka.jsonl"
DEFAULT_TABLEAU_CAP = 10 ** 7
