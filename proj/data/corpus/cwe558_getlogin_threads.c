#include <pthread.h>
#include <stdio.h>
#include <unistd.h>

void *worker(void *arg)
{
    char *who = getlogin();
    printf("thread %ld runs for %s\n", (long)arg, who);
    return NULL;
}

int main(void)
{
    pthread_t t1, t2;
    pthread_create(&t1, NULL, worker, (void *)1);
    pthread_create(&t2, NULL, worker, (void *)2);
    pthread_join(t1, NULL);
    pthread_join(t2, NULL);
    return 0;
}
