# identities/__init__.py
