#!/usr/bin/env python3
"""
Script to start a Celery worker for distributed report solves
"""

import os
import sys
import subprocess
from pathlib import Path

from core.config import settings


def build_worker_command(concurrency: int = 2):
    return [
        "celery",
        "-A", "core.celery_app",
        "worker",
        f"--loglevel={settings.LOG_LEVEL.lower()}",
        f"--concurrency={concurrency}",
        "--queues=default,solves",
        "--prefetch-multiplier=1",
    ]


def start_celery_worker():
    """Start a Celery worker consuming the solve queue"""

    project_dir = Path(__file__).parent
    os.chdir(project_dir)

    cmd = build_worker_command()
    print(f"Starting Celery worker for {settings.PROJECT_NAME} in {project_dir}")
    print(f"Broker: {settings.CELERY_BROKER_URL}")
    print(f"Command: {' '.join(cmd)}")

    try:
        subprocess.run(cmd, check=True)
    except KeyboardInterrupt:
        print("\nCelery worker stopped by user")
    except subprocess.CalledProcessError as e:
        print(f"Celery worker failed to start: {e}")
        print("Check that Redis is reachable (redis-cli ping) and REDIS_URL is set")
        sys.exit(1)
    except FileNotFoundError:
        print("Celery not found; install the project with its dependencies first")
        sys.exit(1)


if __name__ == "__main__":
    start_celery_worker()
