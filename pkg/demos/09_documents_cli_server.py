"""Documents, the command line, and the mutation session service.

QP documents are JSON with string-encoded exact rationals; emission is
canonical, so parse(emit(qp)) round-trips bit-exactly.  The same documents
drive the CLI and the HTTP session API used by the explorer UI.
"""

import json
import threading
import urllib.request

from cyforge import parse_qp, emit_qp, export_dot
from cyforge.cli import main as cli
from cyforge.server import make_server

DOC = json.dumps(
    {
        "vertices": ["1", "2", "3"],
        "arrows": [
            {"name": "a", "source": "2", "target": "1", "degree": 0},
            {"name": "b", "source": "3", "target": "2", "degree": 0},
        ],
        "potential": [],
    }
)

qp = parse_qp(DOC)
print("round trip stable:", parse_qp(emit_qp(qp)) == qp)
print(export_dot(qp))

# the CLI maps onto the library one command per capability
import tempfile, pathlib

with tempfile.TemporaryDirectory() as tmp:
    doc_path = pathlib.Path(tmp) / "a3.json"
    doc_path.write_text(DOC)
    print("cyforge mutate --vertex 2:")
    cli(["mutate", "--input", str(doc_path), "--vertex", "2"])

# the session service holds mutation histories in memory
server = make_server(0)
port = server.server_address[1]
threading.Thread(target=server.serve_forever, daemon=True).start()


def call(method, path, body=None):
    data = json.dumps(body).encode() if body is not None else None
    req = urllib.request.Request(f"http://127.0.0.1:{port}{path}", data=data, method=method)
    with urllib.request.urlopen(req) as resp:
        return json.loads(resp.read().decode())


session = call("POST", "/sessions", json.loads(DOC))
sid = session["session_id"]
view = call("POST", f"/sessions/{sid}/mutate", {"vertex": "2"})
print("arrows after server-side mutation:", [a["name"] for a in view["qp"]["arrows"]])
view = call("POST", f"/sessions/{sid}/undo")
print("arrows after undo:", [a["name"] for a in view["qp"]["arrows"]])
server.shutdown()
