"""
Configuration for the structure verification tools.
"""

import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Paths
STRUCTURES_DIR = os.getenv('STRUCTURES_DIR', 'structures')
SUITES_CONFIG = os.getenv('SUITES_CONFIG', 'suites.yaml')

# Randomized property sampling
DEFAULT_SEED = int(os.getenv('DEFAULT_SEED', 0))
PROPERTY_SAMPLES = int(os.getenv('PROPERTY_SAMPLES', 20))

# Logging
LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
