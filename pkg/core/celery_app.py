from celery import Celery
from core.config import settings
import ssl


# Configure Redis connection based on URL scheme
def get_redis_config():
    broker_url = settings.CELERY_BROKER_URL
    backend_url = settings.CELERY_RESULT_BACKEND

    if broker_url.startswith('rediss://'):
        ssl_options = {
            'ssl_cert_reqs': ssl.CERT_REQUIRED,
            'ssl_ca_certs': None,
            'ssl_certfile': None,
            'ssl_keyfile': None,
        }
        return {
            'broker_url': broker_url,
            'result_backend': backend_url,
            'broker_use_ssl': ssl_options,
            'redis_backend_use_ssl': ssl_options,
        }
    return {
        'broker_url': broker_url,
        'result_backend': backend_url,
    }


redis_config = get_redis_config()

celery_app = Celery(
    settings.PROJECT_NAME,
    broker=redis_config['broker_url'],
    backend=redis_config['result_backend'],
    include=["core.tasks"]
)

config_updates = {
    "task_serializer": "json",
    "accept_content": ["json"],
    "result_serializer": "json",
    "timezone": "UTC",
    "enable_utc": True,
    "task_always_eager": settings.CELERY_TASK_ALWAYS_EAGER,
    "task_eager_propagates": True,
    "worker_prefetch_multiplier": 1,
    "worker_max_tasks_per_child": 50,
    "result_expires": 3600,
    "task_routes": {
        "core.tasks.solve_report_job": {"queue": "solves"},
        "core.tasks.scan_critical_job": {"queue": "solves"},
    },
    "task_default_queue": "default",
}

if 'broker_use_ssl' in redis_config:
    config_updates.update({
        'broker_use_ssl': redis_config['broker_use_ssl'],
        'redis_backend_use_ssl': redis_config['redis_backend_use_ssl'],
    })

celery_app.conf.update(config_updates)
