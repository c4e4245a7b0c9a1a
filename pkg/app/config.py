import os
try:
	from dotenv import load_dotenv
	load_dotenv()
except Exception:
	# python-dotenv not installed in this environment; rely on environment variables
	pass

DATABASE_URL = os.getenv("DATABASE_URL", "sqlite:///./molecules.db")

# oracle bounds: live atom sets in the closure worklist, atoms per cell complex
ORACLE_MAX_ATOMSETS = int(os.getenv("ORACLE_MAX_ATOMSETS", str(2 ** 15)))
ORACLE_MAX_ATOMS = int(os.getenv("ORACLE_MAX_ATOMS", "512"))

# cached boundaries per cell complex, cell complexes per oracle service
ORACLE_D_CACHE_SIZE = int(os.getenv("ORACLE_D_CACHE_SIZE", str(2 ** 18)))
ORACLE_CACHED_COMPLEXES = int(os.getenv("ORACLE_CACHED_COMPLEXES", "8"))

# signed lifts tried for one capped subcomplex
MAX_SIGNED_LIFTS = int(os.getenv("MAX_SIGNED_LIFTS", "4096"))

LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
CATALOG_DIR = os.getenv("CATALOG_DIR", "./catalogs")
