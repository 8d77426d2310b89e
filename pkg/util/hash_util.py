import hashlib
from pathlib import Path


def get_md5_of_file(file: Path):
    file_hash = hashlib.md5()
    with open(file, "rb") as fp:
        while chunk := fp.read(8192):
            file_hash.update(chunk)
    return file_hash.hexdigest()


def get_md5_of_text(text: str):
    return hashlib.md5(text.encode("utf-8")).hexdigest()


def write_digest(path: Path):
    """Write `<name>.md5` next to an emitted file; reruns must reproduce it."""
    digest_path = path.parent / f"{path.name}.md5"
    md5 = get_md5_of_file(path)
    with open(digest_path, 'w', newline='\n') as fp:
        fp.write(md5)
    return digest_path
