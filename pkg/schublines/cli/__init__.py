from schublines.cli.main import main, build_parser
from schublines.cli.serialization import \
    certificate_to_dict, certificate_from_dict, \
    dump_certificate, load_certificate
