# Parsers for configuration files
from .config_file import parse_config, parse_config_file, format_config
